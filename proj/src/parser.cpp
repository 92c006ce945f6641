#include "slfree/parser.hpp"

#include <cctype>

namespace slfree {
namespace {

struct Parser {
    std::string_view s;
    int n;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool at_digit() const {
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    Int parse_uint() {
        skip_ws();
        if (!at_digit()) fail("expected a digit");
        std::size_t start = pos;
        while (at_digit()) ++pos;
        return Int(std::string(s.substr(start, pos - start)));
    }

    int parse_small_uint(const char* what) {
        std::size_t at = pos;
        Int v = parse_uint();
        if (v > 1'000'000) throw ParseError(at, std::string(what) + " too large");
        return v.convert_to<int>();
    }

    Polynomial parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == 'x') {
            std::size_t at = pos;
            ++pos;
            if (!at_digit()) fail("expected variable index after 'x'");
            int idx = parse_small_uint("variable index");
            if (idx < 1 || idx > n) {
                throw ParseError(at, "unknown variable x" + std::to_string(idx) +
                                         " (n = " + std::to_string(n) + ")");
            }
            return Polynomial::variable(n, idx);
        }
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        bool neg = false;
        if (c == '-') {
            ++pos;
            skip_ws();
            if (!at_digit()) fail("expected a rational literal after '-'");
            neg = true;
        }
        if (!at_digit()) fail(std::string("unexpected character '") + c + "'");
        Int num = parse_uint();
        Int den = 1;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t at = pos;
            den = parse_uint();
            if (den == 0) throw ParseError(at, "zero denominator");
        }
        Rational value(num, den);
        if (neg) value = -value;
        return Polynomial::constant(n, value);
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            if (pos < s.size() && s[pos] == '-') fail("negative exponent");
            int e = parse_small_uint("exponent");
            if (e > 1000) fail("exponent too large");
            return base.pow(e);
        }
        return base;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                acc = acc * parse_factor();
            } else if (pos < s.size() && s[pos] == '/') {
                fail("'/' outside a rational literal");
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_expr() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c != '+' && c != '-') break;
            ++pos;
            Polynomial t = parse_term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    Parser p{text, n};
    Polynomial out = p.parse_expr();
    if (!p.eof()) p.fail(std::string("unexpected character '") + p.s[p.pos] + "'");
    return out;
}

}  // namespace slfree
