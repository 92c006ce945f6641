#include "slfree/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace slfree {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    }
}

Monomial Monomial::unit(int n, int var) {
    Monomial m(n);
    if (var < 1 || var > n) {
        throw std::out_of_range("variable index " + std::to_string(var) +
                                " out of range for n = " + std::to_string(n));
    }
    m.exps_[static_cast<std::size_t>(var - 1)] = 1;
    return m;
}

int Monomial::exp(int var) const {
    if (var < 1 || var > var_count()) {
        throw std::out_of_range("variable index " + std::to_string(var) +
                                " out of range for n = " + std::to_string(var_count()));
    }
    return exps_[static_cast<std::size_t>(var - 1)];
}

int Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::times(const Monomial& o) const {
    if (o.var_count() != var_count()) throw std::invalid_argument("variable count mismatch");
    Monomial m = *this;
    for (std::size_t t = 0; t < exps_.size(); ++t) m.exps_[t] += o.exps_[t];
    return m;
}

bool Monomial::divisible_by(const Monomial& o) const {
    if (o.var_count() != var_count()) throw std::invalid_argument("variable count mismatch");
    for (std::size_t t = 0; t < exps_.size(); ++t) {
        if (exps_[t] < o.exps_[t]) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (!divisible_by(o)) throw NotDivisible("monomial not divisible");
    Monomial m = *this;
    for (std::size_t t = 0; t < exps_.size(); ++t) m.exps_[t] -= o.exps_[t];
    return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = total_degree() <=> o.total_degree(); c != 0) return c;
    for (std::size_t t = 0; t < exps_.size() && t < o.exps_.size(); ++t) {
        if (auto c = exps_[t] <=> o.exps_[t]; c != 0) return c;
    }
    return exps_.size() <=> o.exps_.size();
}

std::string Monomial::to_string() const {
    if (is_constant()) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t t = 0; t < exps_.size(); ++t) {
        if (exps_[t] == 0) continue;
        if (!first) out << "*";
        out << "x" << (t + 1);
        if (exps_[t] > 1) out << "^" << exps_[t];
        first = false;
    }
    return out.str();
}

void Polynomial::check_var(int var) const {
    if (var < 1 || var > n_) {
        throw std::out_of_range("variable index " + std::to_string(var) +
                                " out of range for n = " + std::to_string(n_));
    }
}

void Polynomial::check_same(const Polynomial& o) const {
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
}

Polynomial Polynomial::constant(int n, const Rational& c) {
    Polynomial f(n);
    f.add_term(Monomial(n), c);
    return f;
}

Polynomial Polynomial::variable(int n, int var) {
    return from_monomial(Monomial::unit(n, var), 1);
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
    Polynomial f(m.var_count());
    f.add_term(m, c);
    return f;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coeff(Monomial(n_)); }

int Polynomial::total_degree() const {
    // terms_ is graded-lex ordered, so the last term has maximal degree
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.total_degree();
}

int Polynomial::degree_in(int var) const {
    check_var(var);
    int deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.exp(var));
    return deg;
}

Polynomial& Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.var_count() != n_) throw std::invalid_argument("variable count mismatch");
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same(o);
    Polynomial out(n_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(n_);
    if (c == 0) return out;
    for (const auto& [m, cm] : terms_) out.terms_.emplace(m, cm * c);
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative exponent");
    Polynomial out = constant(n_, 1);
    for (int i = 0; i < k; ++i) out = out * (*this);
    return out;
}

Polynomial Polynomial::derivative(int var) const {
    check_var(var);
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        int e = m.exp(var);
        if (e == 0) continue;
        std::vector<int> exps = m.exps();
        exps[static_cast<std::size_t>(var - 1)] = e - 1;
        out.add_term(Monomial(std::move(exps)), c * e);
    }
    return out;
}

Polynomial Polynomial::degree_op() const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * m.total_degree());
    return out;
}

Polynomial Polynomial::degree_op(int var) const {
    check_var(var);
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * m.exp(var));
    return out;
}

Polynomial Polynomial::degree_section() const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        int deg = m.total_degree();
        out.add_term(m, deg > 0 ? c / deg : c);
    }
    return out;
}

Polynomial Polynomial::degree_section(int var) const {
    check_var(var);
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        int deg = m.exp(var);
        out.add_term(m, deg > 0 ? c / deg : c);
    }
    return out;
}

Polynomial Polynomial::integrate_from_zero(int var) const {
    check_var(var);
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> exps = m.exps();
        int& e = exps[static_cast<std::size_t>(var - 1)];
        ++e;
        Rational cc = c / e;
        out.add_term(Monomial(std::move(exps)), cc);
    }
    return out;
}

Polynomial Polynomial::divide_by_var(int var) const {
    check_var(var);
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> exps = m.exps();
        int& e = exps[static_cast<std::size_t>(var - 1)];
        if (e == 0) {
            throw NotDivisible("term " + m.to_string() + " is not divisible by x" +
                               std::to_string(var));
        }
        --e;
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

Polynomial Polynomial::substitute_zero(int var) const {
    check_var(var);
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        if (m.exp(var) == 0) out.terms_.emplace(m, c);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (m.is_constant()) {
            out << rat_str(mag);
        } else if (mag == 1) {
            out << m.to_string();
        } else {
            out << rat_str(mag) << "*" << m.to_string();
        }
        first = false;
    }
    return out.str();
}

}  // namespace slfree
