#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace hilbfilt {

/// All lengths, coefficients, and bound values are exact integers.
/// The bound formulas produce values like 2^232, so fixed-width types
/// are out of the question.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

/// Binomial coefficient C(n, k), zero for n < 0 or k < 0 or k > n.
/// Each partial product n(n-1)...(n-i+1)/i! is an integer, so the
/// running division is exact.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

inline std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// log2 of a positive big integer, accurate to double precision.
inline double log2_big(const BigInt& x) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    const unsigned bits = boost::multiprecision::msb(x); // floor(log2 x)
    if (bits <= 52) return std::log2(x.convert_to<double>());
    const BigInt top = x >> (bits - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline std::size_t decimal_digits(const BigInt& x) {
    std::string s = x.str();
    return s.size() - (s[0] == '-' ? 1 : 0);
}

} // namespace hilbfilt
