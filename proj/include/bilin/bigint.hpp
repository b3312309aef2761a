#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace bilin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// q^e for e >= 0.
BigInt ipow(const BigInt& base, unsigned exponent);
inline BigInt ipow(std::int64_t base, unsigned exponent) { return ipow(BigInt(base), exponent); }

/// q^e as an exact rational; negative exponents allowed (q != 0).
Rational rpow(std::int64_t base, int exponent);

/// Ordinary binomial coefficient, 0 outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// Exact quotient; throws NonIntegralResult when den does not divide num.
BigInt exactDiv(const BigInt& num, const BigInt& den, const char* context);

/// Numerator of r; throws NonIntegralResult when r is not an integer.
BigInt asInteger(const Rational& r, const char* context);

std::string toString(const BigInt& v);
std::string toString(const Rational& v);

}  // namespace bilin
