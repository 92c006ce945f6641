#pragma once

#include "slfree/rational.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace slfree {

// Thrown by divide_by_var when some term has no factor x_i.
class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Exponent vector of x1^a1 ... xn^an.  Ordered graded-lexicographically
// (total degree first, then lex with x1 heaviest); canonical printing walks
// this order descending.
class Monomial {
public:
    explicit Monomial(int n) : exps_(static_cast<std::size_t>(n), 0) {
        if (n < 0) throw std::invalid_argument("negative variable count");
    }
    explicit Monomial(std::vector<int> exps);

    // x_var, 1-based
    static Monomial unit(int n, int var);

    int var_count() const { return static_cast<int>(exps_.size()); }
    int exp(int var) const;  // 1-based
    int total_degree() const;
    bool is_constant() const { return total_degree() == 0; }

    Monomial times(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;

    const std::vector<int>& exps() const { return exps_; }

    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const = default;

    // "x1^2*x3"; "1" for the constant monomial
    std::string to_string() const;

private:
    std::vector<int> exps_;
};

// Sparse multivariate polynomial over Rational.  Values are immutable in
// spirit: every operation returns a fresh normalized polynomial (no stored
// zero coefficients).
class Polynomial {
public:
    explicit Polynomial(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative variable count");
    }

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, const Rational& c);
    static Polynomial variable(int n, int var);  // x_var, 1-based
    static Polynomial from_monomial(const Monomial& m, const Rational& c);

    int var_count() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const;
    // f(0,...,0)
    Rational constant_term() const;
    // Max total degree of a term; 0 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;

    Polynomial& add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int k) const;
    bool operator==(const Polynomial& o) const = default;

    // Formal partial derivative in x_var.
    Polynomial derivative(int var) const;
    // d(f) = sum_i x_i f^i; scales each term by its total degree.
    Polynomial degree_op() const;
    // d_i(f) = x_i f^i
    Polynomial degree_op(int var) const;
    // d': divide each positive-degree term by its total degree, identity on
    // the constant part.
    Polynomial degree_section() const;
    // d_i': same with the i-degree.
    Polynomial degree_section(int var) const;
    // Antiderivative in x_var vanishing at x_var = 0.
    Polynomial integrate_from_zero(int var) const;
    // g with x_var * g == *this; throws NotDivisible.
    Polynomial divide_by_var(int var) const;
    // Substitute x_var = 0.
    Polynomial substitute_zero(int var) const;

    // Canonical form: descending graded-lex, "a" or "a/b" coefficients,
    // explicit '*' between coefficient and monomial.
    std::string to_string() const;

private:
    void check_var(int var) const;
    void check_same(const Polynomial& o) const;

    int n_;
    std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& f) { return f.scaled(c); }

}  // namespace slfree
