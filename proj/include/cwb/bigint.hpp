#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cwb {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

BigInt ipow(const BigInt& base, std::uint64_t exp);
BigInt binom(std::int64_t n, std::int64_t k);
// Gaussian binomial [n choose k]_q; zero outside 0 <= k <= n.
BigInt qbinom(std::int64_t n, std::int64_t k, std::uint64_t q);

BigFloat to_float(const BigInt& v);
BigFloat to_float(const BigRat& v);
double log10_of(const BigRat& v);
double log2_of(const BigRat& v);
double to_double(const BigRat& v);

// Ceil/floor of a rational.
BigInt floor_of(const BigRat& v);
BigInt ceil_of(const BigRat& v);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

} // namespace cwb
