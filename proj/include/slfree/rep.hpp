#pragma once

#include "slfree/lie.hpp"
#include "slfree/polynomial.hpp"
#include "slfree/weyl.hpp"

#include "json.hpp"

#include <optional>

namespace slfree {

// The sl(n+1)-module structure on K[x1..xn] determined by the generator
// tables: p_ij = e_ij . 1 (diagonal entries are the h_i values) and
// q_i = e_{n+1,i} . 1.  rho realizes every basis element as a normal-ordered
// differential operator.
struct Representation {
    int n = 0;
    std::optional<Polynomial> p;  // present when built from a parameter polynomial
    std::vector<std::vector<Polynomial>> pij;  // [i-1][j-1]
    std::vector<Polynomial> qi;                // [i-1]
    std::map<LieBasisElement, WeylElement> rho;

    const WeylElement& action(const LieBasisElement& b) const;
    WeylElement action(const LieCombination& comb) const;
    // sum of the diagonal table entries
    Polynomial p_bar() const;
};

// p_ij = x_i dp/dx_j + delta_ij p(0)/n
Polynomial build_pij(const Polynomial& p, int i, int j, int n);

// q_i = -(1/x_i) \int_0^{x_i} sum_r (p_ii^r p_ri + x_r p_ii^{ir} + p_ii^i p_rr) dx_i
Polynomial build_qi(const Polynomial& p, int i, int n);
Polynomial build_qi_from_tables(const std::vector<std::vector<Polynomial>>& pij, int i, int n);

Representation build_rep(int n, const Polynomial& p);
Representation build_rep_from_tables(int n, std::vector<std::vector<Polynomial>> pij,
                                     std::vector<Polynomial> qi);

// sl_2 module V(p) on K[x]: x.f = xf, h.f = pf + 2xf', y.f = qf - pf' - xf''.
struct Sl2Rep {
    Polynomial p;
    Polynomial q;
    WeylElement x;
    WeylElement y;
    WeylElement h;
};

// q = -(1/2x) \int_0^x (p p' + t p'') dt
Polynomial build_q_sl2(const Polynomial& p);
Sl2Rep build_rep_sl2(const Polynomial& p);

// The V-parameter of the rank-1 module with parameter p: under x = e(1,2),
// y = e(2,1), h = 2 h(1), build_rep(1, p) coincides with
// build_rep_sl2(sl2_parameter(p)).  Equals 2 (d(p) + p(0)).
Polynomial sl2_parameter(const Polynomial& p);

struct PairFailure {
    LieBasisElement a;
    LieBasisElement b;
    WeylElement residual;
};

struct VerificationReport {
    int n = 0;
    std::string p_text;  // canonical parameter when known, else ""
    int pairs_checked = 0;
    std::vector<PairFailure> failures;

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

// Checks [rho(a), rho(b)] == rho([a, b]) for every unordered basis pair.
// Failures are data, not errors.  jobs > 1 runs the pair checks concurrently;
// the report order is deterministic either way.
VerificationReport verify_representation(const Representation& rep, int jobs = 1);

// The three sl_2 relations [h,x] = 2x, [h,y] = -2y, [x,y] = h.
VerificationReport verify_sl2(const Sl2Rep& rep);

struct ClassifyOutcome {
    bool consistent = false;
    Polynomial p{0};        // the recovered parameter, valid when consistent
    std::string violated;   // first violated relation tag otherwise:
                            // "pii", "pij", "pij3", "pij2", "relhq", "rebuild"
};

// Recovers p from generator-on-1 tables, or reports the first violated
// consistency relation.  Relations are checked in the order pii, pij, pij3,
// pij2, relhq, each over lexicographically ordered index tuples.
ClassifyOutcome classify_from_action(int n, const std::vector<std::vector<Polynomial>>& pij,
                                     const std::vector<Polynomial>& qi);

}  // namespace slfree
