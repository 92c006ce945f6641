#include "slfree/weyl.hpp"

#include <sstream>

namespace slfree {

std::strong_ordering WeylKey::operator<=>(const WeylKey& o) const {
    int deg = x.total_degree() + d.total_degree();
    int odeg = o.x.total_degree() + o.d.total_degree();
    if (auto c = deg <=> odeg; c != 0) return c;
    for (std::size_t t = 0; t < x.exps().size(); ++t) {
        if (auto c = x.exps()[t] <=> o.x.exps()[t]; c != 0) return c;
    }
    for (std::size_t t = 0; t < d.exps().size(); ++t) {
        if (auto c = d.exps()[t] <=> o.d.exps()[t]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

void WeylElement::check_same(const WeylElement& o) const {
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
}

WeylElement WeylElement::constant(int n, const Rational& c) {
    WeylElement w(n);
    w.add_term({Monomial(n), Monomial(n)}, c);
    return w;
}

WeylElement WeylElement::multiplication(const Polynomial& f) {
    WeylElement w(f.var_count());
    Monomial none(f.var_count());
    for (const auto& [m, c] : f.terms()) w.terms_.emplace(WeylKey{m, none}, c);
    return w;
}

WeylElement WeylElement::derivative_op(int n, int var) {
    WeylElement w(n);
    w.add_term({Monomial(n), Monomial::unit(n, var)}, 1);
    return w;
}

WeylElement WeylElement::term(const Monomial& x, const Monomial& d, const Rational& c) {
    if (x.var_count() != d.var_count()) throw std::invalid_argument("variable count mismatch");
    WeylElement w(x.var_count());
    w.add_term({x, d}, c);
    return w;
}

WeylElement WeylElement::poly_times_d(const Polynomial& f, const Monomial& d) {
    WeylElement w(f.var_count());
    for (const auto& [m, c] : f.terms()) w.terms_.emplace(WeylKey{m, d}, c);
    return w;
}

WeylElement& WeylElement::add_term(const WeylKey& k, const Rational& c) {
    if (k.x.var_count() != n_ || k.d.var_count() != n_) {
        throw std::invalid_argument("variable count mismatch");
    }
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

WeylElement WeylElement::operator-() const {
    WeylElement out(n_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    check_same(o);
    WeylElement out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
    check_same(o);
    WeylElement out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
    return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    check_same(o);
    WeylElement out(n_);
    std::vector<int> kv(static_cast<std::size_t>(n_), 0);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            const std::vector<int>& b = ka.d.exps();
            const std::vector<int>& c = kb.x.exps();
            // enumerate contraction vectors 0 <= k_i <= min(b_i, c_i)
            Rational base = ca * cb;
            auto emit = [&](auto&& self, int var, const Rational& coeff) -> void {
                if (var == n_) {
                    std::vector<int> xe(static_cast<std::size_t>(n_));
                    std::vector<int> de(static_cast<std::size_t>(n_));
                    for (int t = 0; t < n_; ++t) {
                        auto u = static_cast<std::size_t>(t);
                        xe[u] = ka.x.exps()[u] + c[u] - kv[u];
                        de[u] = b[u] - kv[u] + kb.d.exps()[u];
                    }
                    out.add_term({Monomial(std::move(xe)), Monomial(std::move(de))}, coeff);
                    return;
                }
                auto u = static_cast<std::size_t>(var);
                int top = std::min(b[u], c[u]);
                for (int k = 0; k <= top; ++k) {
                    kv[u] = k;
                    Rational next = coeff;
                    if (k > 0) {
                        next *= Rational(binomial(b[u], k) * falling_factorial(c[u], k));
                    }
                    self(self, var + 1, next);
                }
                kv[u] = 0;
            };
            emit(emit, 0, base);
        }
    }
    return out;
}

WeylElement WeylElement::scaled(const Rational& c) const {
    WeylElement out(n_);
    if (c == 0) return out;
    for (const auto& [k, ck] : terms_) out.terms_.emplace(k, ck * c);
    return out;
}

Polynomial WeylElement::apply(const Polynomial& f) const {
    if (f.var_count() != n_) throw std::invalid_argument("variable count mismatch");
    Polynomial out(n_);
    for (const auto& [k, c] : terms_) {
        for (const auto& [m, cm] : f.terms()) {
            if (!m.divisible_by(k.d)) continue;
            Rational coeff = c * cm;
            for (int t = 1; t <= n_; ++t) {
                int order = k.d.exp(t);
                if (order > 0) coeff *= Rational(falling_factorial(m.exp(t), order));
            }
            out.add_term(k.x.times(m.divided_by(k.d)), coeff);
        }
    }
    return out;
}

int WeylElement::max_x_degree() const {
    int deg = 0;
    for (const auto& [k, c] : terms_) deg = std::max(deg, k.x.total_degree());
    return deg;
}

int WeylElement::max_d_order() const {
    int deg = 0;
    for (const auto& [k, c] : terms_) deg = std::max(deg, k.d.total_degree());
    return deg;
}

std::string WeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        out << rat_str(mag);
        for (int t = 1; t <= n_; ++t) {
            int e = k.x.exp(t);
            if (e == 0) continue;
            out << "*x" << t;
            if (e > 1) out << "^" << e;
        }
        for (int t = 1; t <= n_; ++t) {
            int e = k.d.exp(t);
            if (e == 0) continue;
            out << "*D" << t;
            if (e > 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
    return a * b - b * a;
}

}  // namespace slfree
