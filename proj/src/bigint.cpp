#include "cwb/bigint.hpp"

#include "cwb/error.hpp"

#include <cmath>

namespace cwb {

BigInt ipow(const BigInt& base, std::uint64_t exp)
{
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1)
            r *= b;
        exp >>= 1;
        if (exp)
            b *= b;
    }
    return r;
}

BigInt binom(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

BigInt qbinom(std::int64_t n, std::int64_t k, std::uint64_t q)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt num = 1, den = 1;
    const BigInt Q = q;
    for (std::int64_t i = 0; i < k; ++i) {
        num *= ipow(Q, n - i) - 1;
        den *= ipow(Q, i + 1) - 1;
    }
    return num / den;
}

BigFloat to_float(const BigInt& v) { return BigFloat(v); }

BigFloat to_float(const BigRat& v)
{
    return BigFloat(boost::multiprecision::numerator(v)) / BigFloat(boost::multiprecision::denominator(v));
}

double log10_of(const BigRat& v)
{
    if (v <= 0)
        return -INFINITY;
    BigFloat n(boost::multiprecision::numerator(v)), d(boost::multiprecision::denominator(v));
    return static_cast<double>(boost::multiprecision::log10(n) - boost::multiprecision::log10(d));
}

double log2_of(const BigRat& v) { return log10_of(v) / std::log10(2.0); }

double to_double(const BigRat& v) { return static_cast<double>(to_float(v)); }

BigInt floor_of(const BigRat& v)
{
    BigInt n = boost::multiprecision::numerator(v), d = boost::multiprecision::denominator(v);
    BigInt q = n / d;
    if (n % d != 0 && n < 0)
        q -= 1;
    return q;
}

BigInt ceil_of(const BigRat& v)
{
    BigInt f = floor_of(v);
    return BigRat(f) == v ? f : f + 1;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& v) { return v.str(); }

} // namespace cwb
