// Arbitrary-precision integer and rational scalars used throughout the library.
//
// Every verdict-producing computation in this library runs on these exact
// types; floating point is confined to test oracles.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace starquiver {

using BigInt = boost::multiprecision::cpp_int;

/// Rational number kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Narrows a rational known to be integral; throws otherwise.
inline BigInt to_integer(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("expected an integer, got " + q.str());
    return numerator(q);
}

inline long to_long(const BigInt& x) {
    if (x > std::numeric_limits<long>::max() || x < std::numeric_limits<long>::min())
        throw std::overflow_error("BigInt does not fit in long: " + x.str());
    return static_cast<long>(x);
}

}  // namespace starquiver
