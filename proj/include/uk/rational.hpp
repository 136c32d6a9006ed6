#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace uk {

/// Arbitrary-precision exact rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// q^{-k} as an exact rational.
Rational inverse_power(int q, int k);

/// q^k as an exact integer.
BigInt int_power(int q, int k);

double to_double(const Rational& r);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "num/den" or an integer literal; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

Rational abs(const Rational& r);

/// Rounds to 12 significant digits so emitted decimals are stable and short.
double round12(double x);

}  // namespace uk
