#pragma once

#include "slfree/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace slfree {

// Fixed basis of sl(n+1): e(i,j) for 1 <= i,j <= n+1, i != j, together with
// h(i) = e_ii - I/(n+1) for 1 <= i <= n.  h(n+1) is normalized away as
// -(h_1 + ... + h_n).
struct LieBasisElement {
    enum class Kind { E, H };

    Kind kind;
    int i;
    int j;  // 0 for H

    static LieBasisElement e(int i, int j) { return {Kind::E, i, j}; }
    static LieBasisElement h(int i) { return {Kind::H, i, 0}; }

    bool is_e() const { return kind == Kind::E; }
    bool is_h() const { return kind == Kind::H; }

    void check(int n) const;  // throws std::out_of_range on bad indices

    std::string to_string() const;  // "e(i,j)" / "h(i)"
    static LieBasisElement parse(std::string_view text, int n);

    auto operator<=>(const LieBasisElement&) const = default;
};

// Rational linear combination of basis elements.
struct LieCombination {
    int n = 0;
    std::map<LieBasisElement, Rational> terms;

    void add(const LieBasisElement& b, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    std::string to_string() const;
};

// [a, b] expanded in the fixed basis using [e_ij, e_kl] = d_jk e_il - d_li e_kj,
// with diagonal matrices rewritten through the h's.
LieCombination bracket(const LieBasisElement& a, const LieBasisElement& b, int n);

// All e(i,j) in index order, then h(1..n); (n+1)^2 - 1 elements, consistent
// with LieBasisElement ordering.
std::vector<LieBasisElement> sl_basis(int n);

}  // namespace slfree
