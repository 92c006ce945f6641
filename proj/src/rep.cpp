#include "slfree/rep.hpp"

#include <thread>

namespace slfree {

const WeylElement& Representation::action(const LieBasisElement& b) const {
    auto it = rho.find(b);
    if (it == rho.end()) {
        throw std::out_of_range("no action for basis element " + b.to_string());
    }
    return it->second;
}

WeylElement Representation::action(const LieCombination& comb) const {
    WeylElement out(n);
    for (const auto& [b, c] : comb.terms) out = out + action(b).scaled(c);
    return out;
}

Polynomial Representation::p_bar() const {
    Polynomial out(n);
    for (int i = 1; i <= n; ++i) out = out + pij[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)];
    return out;
}

Polynomial build_pij(const Polynomial& p, int i, int j, int n) {
    if (p.var_count() != n) throw std::invalid_argument("parameter has wrong variable count");
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("index out of range");
    Polynomial out = Polynomial::variable(n, i) * p.derivative(j);
    if (i == j) out = out + Polynomial::constant(n, p.constant_term() / n);
    return out;
}

Polynomial build_qi_from_tables(const std::vector<std::vector<Polynomial>>& pij, int i, int n) {
    if (i < 1 || i > n) throw std::out_of_range("index out of range");
    auto at = [&](int a, int b) -> const Polynomial& {
        return pij[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
    };
    const Polynomial& pii = at(i, i);
    Polynomial integrand(n);
    for (int r = 1; r <= n; ++r) {
        integrand = integrand + pii.derivative(r) * at(r, i) +
                    Polynomial::variable(n, r) * pii.derivative(i).derivative(r) +
                    pii.derivative(i) * at(r, r);
    }
    return -integrand.integrate_from_zero(i).divide_by_var(i);
}

Polynomial build_qi(const Polynomial& p, int i, int n) {
    std::vector<std::vector<Polynomial>> pij(
        static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(n)));
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            pij[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] =
                build_pij(p, a, b, n);
        }
    }
    return build_qi_from_tables(pij, i, n);
}

namespace {

std::map<LieBasisElement, WeylElement> rho_from_tables(
    int n, const std::vector<std::vector<Polynomial>>& pij, const std::vector<Polynomial>& qi) {
    auto at = [&](int a, int b) -> const Polynomial& {
        return pij[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
    };
    std::map<LieBasisElement, WeylElement> rho;
    for (int i = 1; i <= n; ++i) {
        rho.emplace(LieBasisElement::e(i, n + 1),
                    WeylElement::multiplication(Polynomial::variable(n, i)));
    }
    for (int i = 1; i <= n; ++i) {
        WeylElement w = WeylElement::multiplication(at(i, i));
        w = w + WeylElement::term(Monomial::unit(n, i), Monomial::unit(n, i), 1);
        rho.emplace(LieBasisElement::h(i), std::move(w));
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            WeylElement w = WeylElement::multiplication(at(i, j));
            w = w + WeylElement::term(Monomial::unit(n, i), Monomial::unit(n, j), 1);
            rho.emplace(LieBasisElement::e(i, j), std::move(w));
        }
    }
    for (int i = 1; i <= n; ++i) {
        WeylElement w = WeylElement::multiplication(qi[static_cast<std::size_t>(i - 1)]);
        for (int r = 1; r <= n; ++r) {
            w = w - WeylElement::poly_times_d(at(r, i), Monomial::unit(n, r));
            w = w - WeylElement::poly_times_d(at(r, r), Monomial::unit(n, i));
            w = w - WeylElement::term(Monomial::unit(n, r),
                                      Monomial::unit(n, i).times(Monomial::unit(n, r)), 1);
        }
        rho.emplace(LieBasisElement::e(n + 1, i), std::move(w));
    }
    return rho;
}

}  // namespace

Representation build_rep(int n, const Polynomial& p) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    if (p.var_count() != n) throw std::invalid_argument("parameter has wrong variable count");
    Representation rep;
    rep.n = n;
    rep.p = p;
    rep.pij.assign(static_cast<std::size_t>(n),
                   std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(n)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            rep.pij[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                build_pij(p, i, j, n);
        }
    }
    rep.qi.clear();
    for (int i = 1; i <= n; ++i) rep.qi.push_back(build_qi_from_tables(rep.pij, i, n));
    rep.rho = rho_from_tables(n, rep.pij, rep.qi);
    return rep;
}

Representation build_rep_from_tables(int n, std::vector<std::vector<Polynomial>> pij,
                                     std::vector<Polynomial> qi) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    if (static_cast<int>(pij.size()) != n || static_cast<int>(qi.size()) != n) {
        throw std::invalid_argument("table size mismatch");
    }
    for (const auto& row : pij) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table size mismatch");
    }
    Representation rep;
    rep.n = n;
    rep.pij = std::move(pij);
    rep.qi = std::move(qi);
    rep.rho = rho_from_tables(n, rep.pij, rep.qi);
    return rep;
}

Polynomial build_q_sl2(const Polynomial& p) {
    if (p.var_count() != 1) throw std::invalid_argument("expected a one-variable polynomial");
    Polynomial dp = p.derivative(1);
    Polynomial integrand = p * dp + Polynomial::variable(1, 1) * dp.derivative(1);
    return integrand.integrate_from_zero(1).divide_by_var(1).scaled(frac(-1, 2));
}

Sl2Rep build_rep_sl2(const Polynomial& p) {
    if (p.var_count() != 1) throw std::invalid_argument("expected a one-variable polynomial");
    Sl2Rep rep;
    rep.p = p;
    rep.q = build_q_sl2(p);
    Monomial x1 = Monomial::unit(1, 1);
    Monomial d1 = Monomial::unit(1, 1);
    rep.x = WeylElement::multiplication(Polynomial::variable(1, 1));
    rep.h = WeylElement::multiplication(p) + WeylElement::term(x1, d1, 2);
    rep.y = WeylElement::multiplication(rep.q) - WeylElement::poly_times_d(p, d1) -
            WeylElement::term(x1, d1.times(d1), 1);
    return rep;
}

Polynomial sl2_parameter(const Polynomial& p) {
    if (p.var_count() != 1) throw std::invalid_argument("expected a one-variable polynomial");
    return (p.degree_op() + Polynomial::constant(1, p.constant_term())).scaled(2);
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json failures_json = nlohmann::json::array();
    for (const auto& f : failures) {
        failures_json.push_back({{"a", f.a.to_string()},
                                 {"b", f.b.to_string()},
                                 {"residual", f.residual.to_string()}});
    }
    return {{"n", n}, {"p", p_text}, {"pairs_checked", pairs_checked}, {"failures", failures_json}};
}

VerificationReport verify_representation(const Representation& rep, int jobs) {
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    std::vector<LieBasisElement> basis = sl_basis(rep.n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) pairs.emplace_back(a, b);
    }

    std::vector<std::optional<WeylElement>> residuals(pairs.size());
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t t = start; t < pairs.size(); t += stride) {
            const auto& [ia, ib] = pairs[t];
            WeylElement lhs = commutator(rep.action(basis[ia]), rep.action(basis[ib]));
            WeylElement rhs = rep.action(bracket(basis[ia], basis[ib], rep.n));
            WeylElement residual = lhs - rhs;
            if (!residual.is_zero()) residuals[t] = std::move(residual);
        }
    };
    if (jobs == 1 || pairs.size() < 2) {
        work(0, 1);
    } else {
        std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), pairs.size());
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w, workers);
        for (auto& t : threads) t.join();
    }

    VerificationReport report;
    report.n = rep.n;
    if (rep.p) report.p_text = rep.p->to_string();
    report.pairs_checked = static_cast<int>(pairs.size());
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (residuals[t]) {
            report.failures.push_back(
                {basis[pairs[t].first], basis[pairs[t].second], std::move(*residuals[t])});
        }
    }
    return report;
}

VerificationReport verify_sl2(const Sl2Rep& rep) {
    VerificationReport report;
    report.n = 1;
    report.p_text = rep.p.to_string();
    report.pairs_checked = 3;
    auto check = [&](const char* a, const char* b, const WeylElement& lhs, const WeylElement& rhs) {
        WeylElement residual = lhs - rhs;
        if (!residual.is_zero()) {
            // reuse the e/h labels of the sl_2 triple inside sl_2
            LieBasisElement la = (a[0] == 'h') ? LieBasisElement::h(1)
                                               : (a[0] == 'x' ? LieBasisElement::e(1, 2)
                                                              : LieBasisElement::e(2, 1));
            LieBasisElement lb = (b[0] == 'h') ? LieBasisElement::h(1)
                                               : (b[0] == 'x' ? LieBasisElement::e(1, 2)
                                                              : LieBasisElement::e(2, 1));
            report.failures.push_back({la, lb, std::move(residual)});
        }
    };
    check("h", "x", commutator(rep.h, rep.x), rep.x.scaled(2));
    check("h", "y", commutator(rep.h, rep.y), rep.y.scaled(-2));
    check("x", "y", commutator(rep.x, rep.y), rep.h);
    return report;
}

ClassifyOutcome classify_from_action(int n, const std::vector<std::vector<Polynomial>>& pij,
                                     const std::vector<Polynomial>& qi) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    if (static_cast<int>(pij.size()) != n || static_cast<int>(qi.size()) != n) {
        throw std::invalid_argument("table size mismatch");
    }
    auto at = [&](int a, int b) -> const Polynomial& {
        return pij[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
    };
    auto xv = [&](int i) { return Polynomial::variable(n, i); };
    auto inconsistent = [&](const char* tag) {
        ClassifyOutcome out;
        out.consistent = false;
        out.p = Polynomial(n);
        out.violated = tag;
        return out;
    };

    // pii: x_i p_jj^i == x_j p_ii^j
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (xv(i) * at(j, j).derivative(i) != xv(j) * at(i, i).derivative(j)) {
                return inconsistent("pii");
            }
        }
    }
    // pij: x_k p_ij^k - x_i p_kk^j == (d_ki - d_kj) p_ij
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= n; ++k) {
                Polynomial lhs = xv(k) * at(i, j).derivative(k) - xv(i) * at(k, k).derivative(j);
                int delta = (k == i ? 1 : 0) - (k == j ? 1 : 0);
                if (lhs != at(i, j).scaled(delta)) return inconsistent("pij");
            }
        }
    }
    // pij3: x_i p_kl^j - x_k p_ij^l == d_kj p_il - d_il p_kj
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= n; ++k) {
                for (int l = 1; l <= n; ++l) {
                    if (k == l) continue;
                    Polynomial lhs =
                        xv(i) * at(k, l).derivative(j) - xv(k) * at(i, j).derivative(l);
                    Polynomial rhs(n);
                    if (k == j) rhs = rhs + at(i, l);
                    if (i == l) rhs = rhs - at(k, j);
                    if (lhs != rhs) return inconsistent("pij3");
                }
            }
        }
    }
    // pij2: x_i p_ji^j - x_j p_ij^i == p_ii - p_jj
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            Polynomial lhs = xv(i) * at(j, i).derivative(j) - xv(j) * at(i, j).derivative(i);
            if (lhs != at(i, i) - at(j, j)) return inconsistent("pij2");
        }
    }
    // relhq: each q_i matches the integral formula built from the tables
    for (int i = 1; i <= n; ++i) {
        if (qi[static_cast<std::size_t>(i - 1)] != build_qi_from_tables(pij, i, n)) {
            return inconsistent("relhq");
        }
    }

    // p := d'(sum p_ii); certify the round trip
    Polynomial pbar(n);
    for (int i = 1; i <= n; ++i) pbar = pbar + at(i, i);
    Polynomial p = pbar.degree_section();
    Representation rebuilt = build_rep(n, p);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (rebuilt.pij[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] !=
                at(i, j)) {
                return inconsistent("rebuild");
            }
        }
        if (rebuilt.qi[static_cast<std::size_t>(i - 1)] != qi[static_cast<std::size_t>(i - 1)]) {
            return inconsistent("rebuild");
        }
    }
    ClassifyOutcome out;
    out.consistent = true;
    out.p = std::move(p);
    return out;
}

}  // namespace slfree
