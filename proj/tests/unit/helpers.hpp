#pragma once

#include "slfree/parser.hpp"
#include "slfree/polynomial.hpp"

#include <random>

namespace slfree::testing {

// Deterministic sparse polynomial: coefficients in [-9, 9] over denominators
// {1, 2, 3}, roughly `terms` monomials of degree <= maxdeg.
inline Polynomial random_polynomial(std::mt19937_64& rng, int n, int maxdeg, int terms = 5) {
    std::uniform_int_distribution<int> deg_dist(0, maxdeg);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 3);
    Polynomial f(n);
    for (int t = 0; t < terms; ++t) {
        int deg = deg_dist(rng);
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        int left = deg;
        for (int v = 0; v < n; ++v) {
            std::uniform_int_distribution<int> part(0, left);
            int e = (v == n - 1) ? left : part(rng);
            exps[static_cast<std::size_t>(v)] = e;
            left -= e;
        }
        int num = num_dist(rng);
        if (num == 0) continue;
        f.add_term(Monomial(exps), frac(num, den_dist(rng)));
    }
    return f;
}

inline Polynomial pp(const std::string& text, int n) { return parse_polynomial(text, n); }

}  // namespace slfree::testing
