#include "bilin/bigint.hpp"

#include "bilin/error.hpp"

namespace bilin {

BigInt ipow(const BigInt& base, unsigned exponent) {
    BigInt result = 1;
    BigInt b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

Rational rpow(std::int64_t base, int exponent) {
    if (exponent >= 0) return Rational(ipow(base, static_cast<unsigned>(exponent)));
    return Rational(BigInt(1), ipow(base, static_cast<unsigned>(-exponent)));
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt exactDiv(const BigInt& num, const BigInt& den, const char* context) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, context);
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(num, den, quotient, remainder);
    if (remainder != 0) {
        throw Error(ErrorCode::NonIntegralResult,
                    std::string(context) + ": " + num.str() + " / " + den.str());
    }
    return quotient;
}

BigInt asInteger(const Rational& r, const char* context) {
    if (denominator(r) != 1) {
        throw Error(ErrorCode::NonIntegralResult, std::string(context) + ": " + r.str());
    }
    return numerator(r);
}

std::string toString(const BigInt& v) { return v.str(); }

std::string toString(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace bilin
