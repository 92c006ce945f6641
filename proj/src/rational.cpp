#include "slfree/rational.hpp"

#include <stdexcept>

namespace slfree {

std::string rat_str(const Rational& r) {
    Int n = rat_num(r);
    Int d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational frac(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(Int(num), Int(den));
}

long long rat_to_ll(const Rational& r) {
    if (!is_integer(r)) throw std::invalid_argument("not an integer: " + rat_str(r));
    return rat_num(r).convert_to<long long>();
}

Int rat_ceil(const Rational& r) {
    Int n = rat_num(r);
    Int d = rat_den(r);
    Int q = n / d;  // truncates toward zero
    if (n > 0 && n % d != 0) ++q;
    return q;
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int out = 1;
    for (Int i = 0; i < k; ++i) {
        out *= (n - i);
        out /= (i + 1);
    }
    return out;
}

Int factorial(int k) {
    Int out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

Int falling_factorial(const Int& a, int k) {
    Int out = 1;
    for (int i = 0; i < k; ++i) out *= (a - i);
    return out;
}

}  // namespace slfree
