#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mz {

// Exact arithmetic everywhere: Möbius sums, probabilities and series
// coefficients are integers/rationals and tolerance-based comparison would
// hide sign errors.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "num/den", or just "num" when the denominator is 1.
inline std::string rational_to_string(const Rational& q) {
    const Integer den = denominator(q);
    std::string s = numerator(q).str();
    if (den != 1) s += "/" + den.str();
    return s;
}

inline Integer integer_pow(Integer base, unsigned exp) {
    Integer result{1};
    while (exp) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

inline Integer factorial(unsigned n) {
    Integer f{1};
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace mz
