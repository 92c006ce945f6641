#pragma once

#include "slfree/polynomial.hpp"

namespace slfree {

// One normal-ordered Weyl term x^a D^b: the multiplication part is always
// left of the derivative part.  Ordered graded-lex on the concatenated
// exponent vector (a, b).
struct WeylKey {
    Monomial x;
    Monomial d;

    std::strong_ordering operator<=>(const WeylKey& o) const;
    bool operator==(const WeylKey& o) const = default;
};

// Element of the Weyl algebra A_n: a finite sum of terms c * x^a D^b in
// normal form.  Products are exact; no truncation anywhere.
class WeylElement {
public:
    explicit WeylElement(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative variable count");
    }

    static WeylElement zero(int n) { return WeylElement(n); }
    static WeylElement constant(int n, const Rational& c);
    // Multiplication operator f *
    static WeylElement multiplication(const Polynomial& f);
    // D_var
    static WeylElement derivative_op(int n, int var);
    static WeylElement term(const Monomial& x, const Monomial& d, const Rational& c);
    // f * D^d, already normal-ordered
    static WeylElement poly_times_d(const Polynomial& f, const Monomial& d);

    int var_count() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<WeylKey, Rational>& terms() const { return terms_; }

    WeylElement& add_term(const WeylKey& k, const Rational& c);

    WeylElement operator-() const;
    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    // Normal-ordered product via the two-index Leibniz expansion
    //   D^b x^c = sum_k binom(b,k) * falling(c,k) * x^(c-k) D^(b-k).
    WeylElement operator*(const WeylElement& o) const;
    WeylElement scaled(const Rational& c) const;
    bool operator==(const WeylElement& o) const = default;

    Polynomial apply(const Polynomial& f) const;

    int max_x_degree() const;
    int max_d_order() const;

    // Terms as "c*x1^a1*...*D1^b1*..." in descending graded-lex order of (a,b).
    std::string to_string() const;

private:
    void check_same(const WeylElement& o) const;

    int n_;
    std::map<WeylKey, Rational> terms_;
};

WeylElement commutator(const WeylElement& a, const WeylElement& b);

}  // namespace slfree
