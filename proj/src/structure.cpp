#include "slfree/structure.hpp"

namespace slfree {

std::vector<Monomial> monomials_of_degree(int n, int deg) {
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == n - 1) {
            exps[static_cast<std::size_t>(var)] = left;
            out.emplace_back(exps);
            return;
        }
        for (int e = left; e >= 0; --e) {
            exps[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, left - e);
        }
    };
    if (n == 0) {
        if (deg == 0) out.emplace_back(0);
        return out;
    }
    rec(rec, 0, deg);
    return out;
}

long long count_monomials_below(int n, int m) {
    long long count = 0;
    for (int d = 0; d < m; ++d) {
        count += static_cast<long long>(monomials_of_degree(n, d).size());
    }
    return count;
}

ReducibilityPrediction predicted_reducibility(int n, const Polynomial& p) {
    if (p.var_count() != n) throw std::invalid_argument("parameter has wrong variable count");
    ReducibilityPrediction out;
    out.k_value = -Rational(Int(n + 1), Int(n)) * p.constant_term();
    if (is_positive_integer(out.k_value)) {
        out.reducible = true;
        out.k = rat_to_ll(out.k_value);
    }
    return out;
}

Sl2Prediction sl2_predicted_reducibility(const Polynomial& p) {
    if (p.var_count() != 1) throw std::invalid_argument("expected a one-variable polynomial");
    Sl2Prediction out;
    out.p0_doubled = p.constant_term() * 2;
    if (is_nonpositive_integer(out.p0_doubled)) {
        out.reducible = true;
        out.k = rat_to_ll(Rational(1) - out.p0_doubled);
    }
    return out;
}

namespace {

// Every operator in a Lemma-act shaped action lowers total degree by at most
// one; the invariance check below relies on that.
void check_shift_bound(const Representation& rep) {
    for (const auto& [b, w] : rep.rho) {
        for (const auto& [key, c] : w.terms()) {
            if (key.x.total_degree() - key.d.total_degree() < -1) {
                throw std::logic_error("action lowers degree by more than one");
            }
        }
    }
}

}  // namespace

bool degree_ideal_invariant(const Representation& rep, int m) {
    if (m < 1) throw std::invalid_argument("degree must be >= 1");
    // Degree shifts are >= -1, so closure of W_m under the action only needs
    // the degree-m monomials: anything of higher degree lands in degree >= m
    // regardless.
    std::vector<Monomial> level = monomials_of_degree(rep.n, m);
    for (const auto& [b, w] : rep.rho) {
        for (const Monomial& mono : level) {
            Polynomial image = w.apply(Polynomial::from_monomial(mono, 1));
            for (const auto& [im, c] : image.terms()) {
                if (im.total_degree() < m) return false;
            }
        }
    }
    return true;
}

std::optional<int> minimal_invariant_degree(const Representation& rep, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    check_shift_bound(rep);
    for (int m = 1; m <= bound; ++m) {
        if (degree_ideal_invariant(rep, m)) return m;
    }
    return std::nullopt;
}

QuotientData quotient_data(const Representation& rep, int m) {
    if (!degree_ideal_invariant(rep, m)) {
        throw std::invalid_argument("W_" + std::to_string(m) + " is not invariant");
    }
    QuotientData out;
    out.dim = count_monomials_below(rep.n, m);

    // weight of the image of x_1^(m-1) under each h_i, reduced mod W_m
    std::vector<int> exps(static_cast<std::size_t>(rep.n), 0);
    exps[0] = m - 1;
    Monomial gen(exps);
    Polynomial gen_poly = Polynomial::from_monomial(gen, 1);
    for (int i = 1; i <= rep.n; ++i) {
        Polynomial image = rep.action(LieBasisElement::h(i)).apply(gen_poly);
        Polynomial reduced(rep.n);
        for (const auto& [mono, c] : image.terms()) {
            if (mono.total_degree() < m) reduced.add_term(mono, c);
        }
        Rational w = reduced.coeff(gen);
        if (reduced != gen_poly.scaled(w)) {
            throw std::logic_error("quotient generator is not a weight vector");
        }
        out.weight.push_back(w);
    }
    return out;
}

int default_search_bound(int n, const Polynomial& p) {
    Rational claim = Rational(1) - Rational(Int(n + 1), Int(n)) * p.constant_term();
    Int c = rat_ceil(claim) + 2;
    long long v = c.convert_to<long long>();
    return static_cast<int>(std::max<long long>(8, v));
}

nlohmann::json SubmoduleReport::to_json() const {
    nlohmann::json predicted_json = {
        {"reducible", predicted.reducible},
        {"k_value", rat_str(predicted.k_value)},
        {"k", predicted.k ? nlohmann::json(*predicted.k) : nlohmann::json()}};
    nlohmann::json out = {
        {"n", n},
        {"p", p_text},
        {"predicted", predicted_json},
        {"bound", bound},
        {"oracle_min_degree",
         oracle_min_degree ? nlohmann::json(*oracle_min_degree) : nlohmann::json()},
        {"agreement", agreement},
        {"notes", notes}};
    if (sl2) {
        out["sl2_predicted"] = {
            {"reducible", sl2->reducible},
            {"2p0", rat_str(sl2->p0_doubled)},
            {"k", sl2->k ? nlohmann::json(*sl2->k) : nlohmann::json()}};
    } else {
        out["sl2_predicted"] = nullptr;
    }
    if (quotient) {
        nlohmann::json weight = nlohmann::json::array();
        for (const auto& w : quotient->weight) weight.push_back(rat_str(w));
        out["quotient"] = {{"dim", quotient->dim}, {"weight", weight}};
    } else {
        out["quotient"] = nullptr;
    }
    return out;
}

SubmoduleReport analyze_submodules(int n, const Polynomial& p, std::optional<int> bound) {
    SubmoduleReport report;
    report.n = n;
    report.p_text = p.to_string();
    report.predicted = predicted_reducibility(n, p);
    if (n == 1) report.sl2 = sl2_predicted_reducibility(p);
    report.bound = bound ? *bound : default_search_bound(n, p);

    Representation rep = build_rep(n, p);
    report.oracle_min_degree = minimal_invariant_degree(rep, report.bound);
    report.agreement = report.predicted.reducible == report.oracle_min_degree.has_value();

    if (report.oracle_min_degree) {
        report.quotient = quotient_data(rep, *report.oracle_min_degree);
        int m = *report.oracle_min_degree;
        if (report.predicted.k && *report.predicted.k + 1 == m) {
            report.notes.push_back(
                "oracle certifies the proper submodule W_" + std::to_string(m) +
                " (minimal invariant degree m = k + 1 with closed-form k = " +
                std::to_string(*report.predicted.k) + ")");
        }
        long long paper_dim = binomial(Int(m + n - 2), Int(m - 1)).convert_to<long long>();
        report.notes.push_back(
            "quotient dimension by direct count of monomials of degree < " + std::to_string(m) +
            " is " + std::to_string(report.quotient->dim) +
            "; the closed-form count C(m+n-2, m-1) = " + std::to_string(paper_dim));
    }
    if (n == 1 && report.sl2 && report.sl2->reducible != report.predicted.reducible) {
        report.notes.push_back(
            "n = 1 boundary: the general closed form (k = " + rat_str(report.predicted.k_value) +
            " not in N_+) predicts a simple module while the rank-one criterion (2p(0) = " +
            rat_str(report.sl2->p0_doubled) + " in -N) predicts a proper submodule; the oracle " +
            (report.oracle_min_degree
                 ? "certifies W_" + std::to_string(*report.oracle_min_degree) + " invariant"
                 : "finds no invariant W_m within the bound"));
    }
    return report;
}

nlohmann::json Sl2SequenceWitness::to_json() const {
    if (!applicable) return {{"applicable", false}};
    return {{"applicable", true},
            {"k", k},
            {"sub_parameter", sub_parameter.to_string()},
            {"quotient_highest_weight", rat_str(quotient_hw)},
            {"quotient_dim", quotient_dim},
            {"intertwiner_ok", intertwiner_ok}};
}

Sl2SequenceWitness sl2_exact_sequence_witness(const Polynomial& p) {
    if (p.var_count() != 1) throw std::invalid_argument("expected a one-variable polynomial");
    Sl2SequenceWitness out;
    Rational p0 = p.constant_term();
    if (!is_nonpositive_integer(p0)) return out;

    out.applicable = true;
    out.k = rat_to_ll(Rational(1) - p0);
    out.sub_parameter = p - Polynomial::constant(1, p0 * 2) + Polynomial::constant(1, 2);
    out.quotient_hw = -p0;
    out.quotient_dim = out.k;

    // theta(f) = x^k f intertwines V(sub_parameter) -> V(p) iff
    // rho_p(a) x^k == x^k rho_sub(a) for a in {x, h, y}
    Sl2Rep top = build_rep_sl2(p);
    Sl2Rep sub = build_rep_sl2(out.sub_parameter);
    std::vector<int> exps{static_cast<int>(out.k)};
    WeylElement xk = WeylElement::multiplication(
        Polynomial::from_monomial(Monomial(exps), 1));
    out.intertwiner_ok = (top.x * xk == xk * sub.x) && (top.h * xk == xk * sub.h) &&
                         (top.y * xk == xk * sub.y);
    return out;
}

bool isomorphism_test(const Polynomial& p, const Polynomial& p_tilde) {
    if (p.var_count() != p_tilde.var_count()) {
        throw std::invalid_argument("variable count mismatch");
    }
    return p == p_tilde;
}

}  // namespace slfree
