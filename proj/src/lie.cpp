#include "slfree/lie.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace slfree {

void LieBasisElement::check(int n) const {
    if (is_e()) {
        if (i < 1 || i > n + 1 || j < 1 || j > n + 1 || i == j) {
            throw std::out_of_range("bad basis element " + to_string() +
                                    " for sl(" + std::to_string(n + 1) + ")");
        }
    } else {
        if (i < 1 || i > n) {
            throw std::out_of_range("bad basis element " + to_string() +
                                    " for sl(" + std::to_string(n + 1) + ")");
        }
    }
}

std::string LieBasisElement::to_string() const {
    if (is_e()) return "e(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return "h(" + std::to_string(i) + ")";
}

LieBasisElement LieBasisElement::parse(std::string_view text, int n) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("bad basis element '" + std::string(text) +
                                    "', expected e(i,j) or h(i)");
    };
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c) fail();
        ++pos;
    };
    auto number = [&]() -> int {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || pos - start > 6) fail();
        return std::stoi(std::string(text.substr(start, pos - start)));
    };

    skip();
    if (pos >= text.size()) fail();
    char kind = text[pos++];
    LieBasisElement out{};
    if (kind == 'e') {
        expect('(');
        int i = number();
        expect(',');
        int j = number();
        expect(')');
        out = e(i, j);
    } else if (kind == 'h') {
        expect('(');
        int i = number();
        expect(')');
        out = h(i);
    } else {
        fail();
    }
    skip();
    if (pos != text.size()) fail();
    out.check(n);
    return out;
}

void LieCombination::add(const LieBasisElement& b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string LieCombination::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [b, c] : terms) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (mag != 1) out << rat_str(mag) << "*";
        out << b.to_string();
        first = false;
    }
    return out.str();
}

namespace {

// Accumulates a combination of gl elements, deferring the rewrite of the
// diagonal into the h basis until the end.
struct GlAccumulator {
    int n;
    LieCombination out;
    std::vector<Rational> diag;  // coefficient of e_tt, t = 1..n+1

    explicit GlAccumulator(int n_) : n(n_), diag(static_cast<std::size_t>(n_) + 1, Rational(0)) {
        out.n = n_;
    }

    void add(int i, int j, const Rational& c) {
        if (i == j) {
            diag[static_cast<std::size_t>(i - 1)] += c;
        } else {
            out.add(LieBasisElement::e(i, j), c);
        }
    }

    LieCombination finish() {
        // A traceless diagonal sum(d_t e_tt) equals sum_{t<=n} (d_t - d_{n+1}) h_t.
        Rational trace = 0;
        for (const auto& d : diag) trace += d;
        if (trace != 0) throw std::logic_error("bracket produced a trace");
        const Rational& last = diag[static_cast<std::size_t>(n)];
        for (int t = 1; t <= n; ++t) {
            out.add(LieBasisElement::h(t), diag[static_cast<std::size_t>(t - 1)] - last);
        }
        return std::move(out);
    }
};

}  // namespace

LieCombination bracket(const LieBasisElement& a, const LieBasisElement& b, int n) {
    a.check(n);
    b.check(n);
    GlAccumulator acc(n);
    if (a.is_h() && b.is_h()) {
        return acc.finish();
    }
    if (a.is_h() && b.is_e()) {
        // [h_i, e_kl] = (d_ik - d_il) e_kl; the I/(n+1) part is central
        Rational c = Rational((a.i == b.i) ? 1 : 0) - Rational((a.i == b.j) ? 1 : 0);
        acc.add(b.i, b.j, c);
        return acc.finish();
    }
    if (a.is_e() && b.is_h()) {
        Rational c = Rational((b.i == a.i) ? 1 : 0) - Rational((b.i == a.j) ? 1 : 0);
        acc.add(a.i, a.j, -c);
        return acc.finish();
    }
    // [e_ij, e_kl] = d_jk e_il - d_li e_kj
    if (a.j == b.i) acc.add(a.i, b.j, 1);
    if (b.j == a.i) acc.add(b.i, a.j, -1);
    return acc.finish();
}

std::vector<LieBasisElement> sl_basis(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    std::vector<LieBasisElement> basis;
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = 1; j <= n + 1; ++j) {
            if (i != j) basis.push_back(LieBasisElement::e(i, j));
        }
    }
    for (int i = 1; i <= n; ++i) basis.push_back(LieBasisElement::h(i));
    return basis;
}

}  // namespace slfree
