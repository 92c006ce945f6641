#include "slfree/tensor.hpp"

#include <algorithm>

namespace slfree {

FiniteModule build_finite_module(int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    FiniteModule out;
    out.k = k;
    out.x = Matrix(k + 1, k + 1);
    out.y = Matrix(k + 1, k + 1);
    out.h = Matrix(k + 1, k + 1);
    for (int j = 0; j <= k; ++j) out.h.at(j, j) = k - 2 * j;
    for (int j = 0; j < k; ++j) out.y.at(j + 1, j) = 1;
    for (int j = 1; j <= k; ++j) out.x.at(j - 1, j) = Rational(Int(j) * Int(k - j + 1));
    return out;
}

std::vector<int> clebsch_gordan_components(int k, int m) {
    if (k < 0 || m < 0) throw std::invalid_argument("weights must be >= 0");
    if (m > k) std::swap(k, m);
    std::vector<int> formula;
    for (int i = 0; i <= m; ++i) formula.push_back(k + m - 2 * i);

    // independent route: peel highest-weight ladders off the weight multiset
    std::map<int, long long> mult;
    for (int a = -k; a <= k; a += 2) {
        for (int b = -m; b <= m; b += 2) ++mult[a + b];
    }
    std::vector<int> peeled;
    while (!mult.empty()) {
        int top = mult.rbegin()->first;
        peeled.push_back(top);
        for (int w = top; w >= -top; w -= 2) {
            auto it = mult.find(w);
            if (it == mult.end() || it->second == 0) {
                throw std::logic_error("weight ladder does not close");
            }
            if (--it->second == 0) mult.erase(it);
        }
    }
    if (peeled != formula) throw std::logic_error("weight counting disagrees with the formula");
    return formula;
}

TensorElement TensorElement::zero(int k) {
    TensorElement t;
    t.comps.assign(static_cast<std::size_t>(k) + 1, Polynomial(1));
    return t;
}

bool TensorElement::is_zero() const {
    return std::all_of(comps.begin(), comps.end(),
                       [](const Polynomial& f) { return f.is_zero(); });
}

int TensorElement::max_degree() const {
    int deg = 0;
    for (const auto& f : comps) deg = std::max(deg, f.total_degree());
    return deg;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    if (o.comps.size() != comps.size()) throw std::invalid_argument("component count mismatch");
    TensorElement out = *this;
    for (std::size_t t = 0; t < comps.size(); ++t) out.comps[t] = out.comps[t] + o.comps[t];
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    if (o.comps.size() != comps.size()) throw std::invalid_argument("component count mismatch");
    TensorElement out = *this;
    for (std::size_t t = 0; t < comps.size(); ++t) out.comps[t] = out.comps[t] - o.comps[t];
    return out;
}

TensorElement TensorElement::scaled(const Rational& c) const {
    TensorElement out = *this;
    for (auto& f : out.comps) f = f.scaled(c);
    return out;
}

std::vector<std::string> TensorElement::to_strings() const {
    std::vector<std::string> out;
    out.reserve(comps.size());
    for (const auto& f : comps) out.push_back(f.to_string());
    return out;
}

TensorRep::TensorRep(Polynomial p, int k) : p_(std::move(p)), q_(1), finite_(build_finite_module(k)) {
    if (p_.var_count() != 1) throw std::invalid_argument("expected a one-variable polynomial");
    q_ = build_q_sl2(p_);
}

TensorElement TensorRep::matrix_apply(const Matrix& m, const TensorElement& t) const {
    if (t.dim() != finite_.dim()) throw std::invalid_argument("component count mismatch");
    TensorElement out = TensorElement::zero(finite_.k);
    for (int r = 0; r < finite_.dim(); ++r) {
        for (int c = 0; c < finite_.dim(); ++c) {
            const Rational& v = m.at(r, c);
            if (v == 0) continue;
            out.comps[static_cast<std::size_t>(r)] =
                out.comps[static_cast<std::size_t>(r)] +
                t.comps[static_cast<std::size_t>(c)].scaled(v);
        }
    }
    return out;
}

TensorElement TensorRep::apply_x(const TensorElement& t) const {
    TensorElement out = matrix_apply(finite_.x, t);
    Polynomial x = Polynomial::variable(1, 1);
    for (std::size_t c = 0; c < out.comps.size(); ++c) {
        out.comps[c] = out.comps[c] + x * t.comps[c];
    }
    return out;
}

TensorElement TensorRep::apply_h(const TensorElement& t) const {
    TensorElement out = matrix_apply(finite_.h, t);
    Polynomial x = Polynomial::variable(1, 1);
    for (std::size_t c = 0; c < out.comps.size(); ++c) {
        const Polynomial& f = t.comps[c];
        out.comps[c] = out.comps[c] + p_ * f + x.scaled(2) * f.derivative(1);
    }
    return out;
}

TensorElement TensorRep::apply_y(const TensorElement& t) const {
    TensorElement out = matrix_apply(finite_.y, t);
    Polynomial x = Polynomial::variable(1, 1);
    for (std::size_t c = 0; c < out.comps.size(); ++c) {
        const Polynomial& f = t.comps[c];
        Polynomial df = f.derivative(1);
        out.comps[c] = out.comps[c] + q_ * f - p_ * df - x * df.derivative(1);
    }
    return out;
}

TensorElement TensorRep::module_action(const Polynomial& r, const TensorElement& t) const {
    if (r.var_count() != 1) throw std::invalid_argument("expected a one-variable polynomial");
    TensorElement out = TensorElement::zero(finite_.k);
    Polynomial coeff = r;  // r^(s) / s!
    TensorElement power = t;  // X^s t
    for (int s = 0; s <= finite_.k; ++s) {
        if (coeff.is_zero() || power.is_zero()) break;
        for (std::size_t c = 0; c < out.comps.size(); ++c) {
            out.comps[c] = out.comps[c] + coeff * power.comps[c];
        }
        power = matrix_apply(finite_.x, power);
        coeff = coeff.derivative(1).scaled(Rational(1, Int(s + 1)));
    }
    return out;
}

nlohmann::json SplitResult::to_json() const {
    return {{"phi_gen", phi_gen.to_strings()},
            {"psi_gen", psi_gen.to_strings()},
            {"checks",
             {{"h_phi", checks.h_phi},
              {"y_phi", checks.y_phi},
              {"h_psi", checks.h_psi},
              {"y_psi", checks.y_psi},
              {"directness_identity", checks.directness_identity},
              {"spans", checks.spans},
              {"intersection_trivial", checks.intersection_trivial}}},
            {"checked_degree", checked_degree}};
}

namespace {

// Coordinates of a tensor element on the basis (component, x-degree) with
// degrees 0..maxdeg.
std::vector<Rational> coords(const TensorElement& t, int maxdeg) {
    if (t.max_degree() > maxdeg) throw std::logic_error("coordinate truncation too small");
    std::vector<Rational> out;
    out.reserve(t.comps.size() * static_cast<std::size_t>(maxdeg + 1));
    for (const auto& f : t.comps) {
        for (int d = 0; d <= maxdeg; ++d) {
            std::vector<int> exps{d};
            out.push_back(f.coeff(Monomial(exps)));
        }
    }
    return out;
}

Matrix column_matrix(const std::vector<TensorElement>& cols, int maxdeg, int comps) {
    Matrix m(comps * (maxdeg + 1), static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<Rational> v = coords(cols[c], maxdeg);
        for (std::size_t r = 0; r < v.size(); ++r) {
            m.at(static_cast<int>(r), static_cast<int>(c)) = v[r];
        }
    }
    return m;
}

Polynomial x_power(int d) {
    std::vector<int> exps{d};
    return Polynomial::from_monomial(Monomial(exps), 1);
}

}  // namespace

SplitResult split_tensor_L1(const Polynomial& p, int degree) {
    if (p.var_count() != 1) throw std::invalid_argument("expected a one-variable polynomial");
    Rational p0 = p.constant_term();
    if (p0 == 1) {
        throw DegenerateSplit("p(0) = 1: the complement construction divides by 1 - p(0)");
    }

    Polynomial x = Polynomial::variable(1, 1);
    Polynomial u = (p - Polynomial::constant(1, p0)).divide_by_var(1).scaled(frac(1, 2));
    Polynomial v = (p + Polynomial::constant(1, p0)).scaled(frac(1, 2));
    auto phi = [&](const Polynomial& f) {
        return TensorElement{{u * f + f.derivative(1), f}};
    };
    auto psi = [&](const Polynomial& f) {
        return TensorElement{{v * f + x * f.derivative(1), x * f}};
    };

    TensorRep rep(p, 1);
    const Polynomial& q = rep.q();

    SplitResult out;
    out.checked_degree = degree;
    out.phi_gen = phi(Polynomial::constant(1, 1));
    out.psi_gen = psi(Polynomial::constant(1, 1));

    Polynomial one = Polynomial::constant(1, 1);
    out.checks.h_phi = rep.apply_h(out.phi_gen) == phi(p - one);
    out.checks.y_phi = rep.apply_y(out.phi_gen) == phi(q + u);
    out.checks.h_psi = rep.apply_h(out.psi_gen) == psi(p + one);
    out.checks.y_psi = rep.apply_y(out.psi_gen) == psi(q - u);

    // phi(x f) - psi(f) = ((1 - p(0)) f, 0) on monomials up to the degree cap
    out.checks.directness_identity = true;
    for (int d = 0; d <= degree; ++d) {
        Polynomial f = x_power(d);
        TensorElement want{{f.scaled(Rational(1) - p0), Polynomial(1)}};
        if (phi(x * f) - psi(f) != want) {
            out.checks.directness_identity = false;
            break;
        }
    }

    // span: every (x^i, 0) and (0, x^i) for i <= degree is an exact combination
    // of phi(x^a), psi(x^a); intersection: the combined family up to the cap is
    // linearly independent.
    int gen_degree = degree + std::max(p.total_degree(), 1) + 2;
    std::vector<TensorElement> gens;
    for (int a = 0; a <= gen_degree; ++a) gens.push_back(phi(x_power(a)));
    for (int a = 0; a <= gen_degree; ++a) gens.push_back(psi(x_power(a)));
    int maxdeg = gen_degree + std::max(p.total_degree(), 1) + 1;
    Matrix a = column_matrix(gens, maxdeg, 2);

    std::vector<TensorElement> targets;
    for (int i = 0; i <= degree; ++i) targets.push_back(TensorElement{{x_power(i), Polynomial(1)}});
    for (int i = 0; i <= degree; ++i) targets.push_back(TensorElement{{Polynomial(1), x_power(i)}});
    Matrix b = column_matrix(targets, maxdeg, 2);
    auto solved = solve_linear_multi(a, b);
    out.checks.spans = std::all_of(solved.begin(), solved.end(),
                                   [](const auto& s) { return s.has_value(); });

    std::vector<TensorElement> small;
    for (int a2 = 0; a2 <= degree; ++a2) small.push_back(phi(x_power(a2)));
    for (int a2 = 0; a2 <= degree; ++a2) small.push_back(psi(x_power(a2)));
    Matrix small_m = column_matrix(small, maxdeg, 2);
    out.checks.intersection_trivial = nullspace(small_m).empty();
    return out;
}

nlohmann::json DecomposeResult::to_json(const Polynomial& p, int k) const {
    nlohmann::json out = {{"p", p.to_string()}, {"k", k}};
    if (!ok) {
        out["error"] = error;
        if (failure_degree >= 0) out["failure_degree"] = failure_degree;
        return out;
    }
    nlohmann::json summands_json = nlohmann::json::array();
    for (const auto& s : summands) {
        summands_json.push_back({{"shift", s.shift}, {"generator", s.generator.to_strings()}});
    }
    out["summands"] = summands_json;
    out["certified_up_to_degree"] = certified_degree;
    return out;
}

DecomposeResult decompose_tensor(const Polynomial& p, int k, std::optional<int> degree) {
    if (p.var_count() != 1) throw std::invalid_argument("expected a one-variable polynomial");
    if (k < 0) throw std::invalid_argument("k must be >= 0");

    int deg_p = p.total_degree();
    int cert_degree = degree ? *degree : k + deg_p + 6;
    if (cert_degree < k + deg_p + 2) {
        throw std::invalid_argument("truncation degree too small");
    }
    // component degree cap for the generators; exact for constant p (where the
    // generators have components of degree <= k) and generous otherwise
    int gen_cap = k * (deg_p + 1);
    if (gen_cap < k) gen_cap = k;

    TensorRep rep(p, k);
    DecomposeResult out;
    out.certified_degree = cert_degree;

    int comps = k + 1;
    int unknowns = comps * (gen_cap + 1);
    // deg q can reach 2 deg p - 2
    int out_deg = gen_cap + std::max(2 * deg_p - 2, deg_p) + 2;
    auto fail = [&](std::string why, int at_degree) {
        out.ok = false;
        out.error = std::move(why);
        out.failure_degree = at_degree;
        return out;
    };

    for (int i = 0; i <= k; ++i) {
        int shift = k - 2 * i;
        Polynomial p_shift = p + Polynomial::constant(1, shift);
        Polynomial q_shift = build_q_sl2(p_shift);

        // linear conditions on g: h.g = p_shift * g and y.g = q_shift * g
        int rows_h = comps * (out_deg + 1);
        int rows_y = comps * (out_deg + 1);
        Matrix system(rows_h + rows_y, unknowns);
        for (int c = 0; c < comps; ++c) {
            for (int d = 0; d <= gen_cap; ++d) {
                TensorElement unit = TensorElement::zero(k);
                unit.comps[static_cast<std::size_t>(c)] = x_power(d);
                TensorElement cond_h = rep.apply_h(unit) - rep.module_action(p_shift, unit);
                TensorElement cond_y = rep.apply_y(unit) - rep.module_action(q_shift, unit);
                std::vector<Rational> vh = coords(cond_h, out_deg);
                std::vector<Rational> vy = coords(cond_y, out_deg);
                int col = c * (gen_cap + 1) + d;
                for (std::size_t r = 0; r < vh.size(); ++r) {
                    system.at(static_cast<int>(r), col) = vh[r];
                }
                for (std::size_t r = 0; r < vy.size(); ++r) {
                    system.at(rows_h + static_cast<int>(r), col) = vy[r];
                }
            }
        }
        auto kernel = nullspace(system);
        if (kernel.empty()) {
            return fail("no generator for shift " + std::to_string(shift), gen_cap);
        }
        if (kernel.size() > 1) {
            return fail("generator for shift " + std::to_string(shift) + " is not unique", gen_cap);
        }
        // normalize: first nonzero coordinate is 1
        std::vector<Rational>& vec = kernel.front();
        Rational lead = 0;
        for (const auto& c : vec) {
            if (c != 0) {
                lead = c;
                break;
            }
        }
        TensorElement gen = TensorElement::zero(k);
        for (int c = 0; c < comps; ++c) {
            for (int d = 0; d <= gen_cap; ++d) {
                std::vector<int> exps{d};
                gen.comps[static_cast<std::size_t>(c)].add_term(
                    Monomial(exps), vec[static_cast<std::size_t>(c * (gen_cap + 1) + d)] / lead);
            }
        }
        out.summands.push_back({shift, std::move(gen)});
    }

    // certificate (a): f -> f * g_i is injective up to the truncation degree,
    // checked per degree so a rank drop names the first bad degree
    int big_deg = cert_degree + gen_cap + 2;
    int coord_deg = big_deg + gen_cap + 1;
    for (const auto& s : out.summands) {
        std::vector<TensorElement> cols;
        int expected = 0;
        for (int d = 0; d <= cert_degree; ++d) {
            cols.push_back(rep.module_action(x_power(d), s.generator));
            ++expected;
            if (rank(column_matrix(cols, coord_deg, comps)) != expected) {
                return fail("free action rank drops for shift " + std::to_string(s.shift), d);
            }
        }
    }

    // certificate (b): the combined family is independent and exhausts every
    // coordinate (component, degree <= cert_degree)
    std::vector<TensorElement> combined;
    for (const auto& s : out.summands) {
        for (int d = 0; d <= cert_degree; ++d) {
            combined.push_back(rep.module_action(x_power(d), s.generator));
        }
    }
    Matrix comb = column_matrix(combined, coord_deg, comps);
    if (rank(comb) != static_cast<int>(combined.size())) {
        return fail("combined family is not direct", cert_degree);
    }

    std::vector<TensorElement> big;
    for (const auto& s : out.summands) {
        for (int d = 0; d <= big_deg; ++d) {
            big.push_back(rep.module_action(x_power(d), s.generator));
        }
    }
    Matrix big_m = column_matrix(big, coord_deg, comps);
    std::vector<TensorElement> targets;
    for (int c = 0; c < comps; ++c) {
        for (int d = 0; d <= cert_degree; ++d) {
            TensorElement t = TensorElement::zero(k);
            t.comps[static_cast<std::size_t>(c)] = x_power(d);
            targets.push_back(std::move(t));
        }
    }
    Matrix targets_m = column_matrix(targets, coord_deg, comps);
    auto solved = solve_linear_multi(big_m, targets_m);
    for (std::size_t t = 0; t < solved.size(); ++t) {
        if (!solved[t]) {
            int d = static_cast<int>(t) % (cert_degree + 1);
            return fail("sum does not exhaust the tensor product", d);
        }
    }

    // certificate (c): y.g_i stays in the copy generated by g_i and the
    // membership witness is exactly q_{p+shift}
    for (const auto& s : out.summands) {
        Polynomial q_shift = build_q_sl2(p + Polynomial::constant(1, s.shift));
        TensorElement lhs = rep.apply_y(s.generator);
        TensorElement rhs = rep.module_action(q_shift, s.generator);
        if (!(lhs - rhs).is_zero()) {
            return fail("y does not preserve the copy for shift " + std::to_string(s.shift), 0);
        }
    }

    out.ok = true;
    return out;
}

}  // namespace slfree
