#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace regshake {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt factorial(long long n) {
    BigInt r = 1;
    for (long long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace regshake
