#pragma once

#include "slfree/rep.hpp"

#include <optional>

namespace slfree {

// Closed-form simplicity prediction: reducible iff k = -(n+1)/n p(0) is a
// positive integer.
struct ReducibilityPrediction {
    bool reducible = false;
    Rational k_value;             // the exact k
    std::optional<long long> k;   // present when k_value is a positive integer
};

ReducibilityPrediction predicted_reducibility(int n, const Polynomial& p);

// The rank-one form of the same question: V(P) with P = sl2_parameter(p) is
// reducible iff P(0) = 2 p(0) lies in -N, with submodule x^k K[x],
// k = 1 - 2 p(0).
struct Sl2Prediction {
    bool reducible = false;
    Rational p0_doubled;
    std::optional<long long> k;
};

Sl2Prediction sl2_predicted_reducibility(const Polynomial& p);

// Smallest m in [1, bound] for which W_m (the span of monomials of total
// degree >= m) is invariant under every rho(a), decided symbolically on the
// degree-m monomials.  Absent when no such m <= bound exists.
std::optional<int> minimal_invariant_degree(const Representation& rep, int bound);

// Exact invariance check for a single W_m.
bool degree_ideal_invariant(const Representation& rep, int m);

struct QuotientData {
    long long dim = 0;                // number of monomials of total degree < m
    std::vector<Rational> weight;     // values of h_1..h_n on the image of x_1^(m-1)
};

// Requires W_m invariant.
QuotientData quotient_data(const Representation& rep, int m);

// max(8, ceil(1 - (n+1) p(0) / n) + 2)
int default_search_bound(int n, const Polynomial& p);

struct SubmoduleReport {
    int n = 0;
    std::string p_text;
    ReducibilityPrediction predicted;
    std::optional<Sl2Prediction> sl2;  // present for n = 1
    int bound = 0;
    std::optional<int> oracle_min_degree;
    bool agreement = false;  // closed-form verdict matches the oracle verdict
    std::optional<QuotientData> quotient;
    std::vector<std::string> notes;

    nlohmann::json to_json() const;
};

SubmoduleReport analyze_submodules(int n, const Polynomial& p,
                                   std::optional<int> bound = std::nullopt);

// Witness data for 0 -> V(p - 2p(0) + 2) -> V(p) -> L(-p(0)) -> 0.
struct Sl2SequenceWitness {
    bool applicable = false;  // p(0) in -N
    long long k = 0;          // 1 - p(0)
    Polynomial sub_parameter{1};
    Rational quotient_hw;
    long long quotient_dim = 0;
    bool intertwiner_ok = false;  // f -> x^k f commutes with x, h, y exactly

    nlohmann::json to_json() const;
};

Sl2SequenceWitness sl2_exact_sequence_witness(const Polynomial& p);

// M(p) and M(p~) are isomorphic iff p == p~.
bool isomorphism_test(const Polynomial& p, const Polynomial& p_tilde);

// All monomials in n variables of total degree exactly deg.
std::vector<Monomial> monomials_of_degree(int n, int deg);
// Number of monomials of total degree < m.
long long count_monomials_below(int n, int m);

}  // namespace slfree
