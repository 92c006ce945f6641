#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace slfree {

// Exact arithmetic over arbitrary-precision rationals.  cpp_rational keeps
// values in lowest terms with positive denominator, so equality and the
// string form are canonical.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }
inline bool is_positive_integer(const Rational& r) {
    return is_integer(r) && rat_num(r) > 0;
}
inline bool is_nonpositive_integer(const Rational& r) {
    return is_integer(r) && rat_num(r) <= 0;
}

// "a" or "a/b"
std::string rat_str(const Rational& r);

Rational frac(long long num, long long den = 1);

// Requires is_integer(r) and a value that fits in long long.
long long rat_to_ll(const Rational& r);

// Smallest integer >= r.
Int rat_ceil(const Rational& r);

Int binomial(const Int& n, const Int& k);
Int factorial(int k);
// a (a-1) ... (a-k+1)
Int falling_factorial(const Int& a, int k);

}  // namespace slfree
