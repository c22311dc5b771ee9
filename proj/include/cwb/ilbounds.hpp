#pragma once

#include "cwb/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cwb {

enum class KoptPolicy { best, singleton };

// Upper bound on the dimension of a q-ary [n, k, d] code: min of Singleton, Hamming, Griesmer, Plotkin.
std::size_t kopt(std::uint64_t q, std::size_t n, std::size_t d, KoptPolicy policy = KoptPolicy::best);
std::size_t kopt_singleton(std::size_t n, std::size_t d);
std::size_t kopt_hamming(std::uint64_t q, std::size_t n, std::size_t d);
std::size_t kopt_griesmer(std::uint64_t q, std::size_t n, std::size_t d);
std::size_t kopt_plotkin(std::uint64_t q, std::size_t n, std::size_t d);

// ((B - c a)/(b - a) + 1)(b^s - a^s) + c a^s; c a^s when a = b.
BigRat maximize_convex_sum(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& B, unsigned s);

struct MatrixCounts {
    BigInt M; // rows x cols matrices of rank r
    BigInt N; // those without zero columns
};
MatrixCounts count_matrices(std::size_t rows, std::size_t cols, std::size_t r, std::uint64_t q);

// Number of s x t matrices over F_q without zero columns having some nonzero e with exactly xi
// columns equal to a scalar multiple of e.
BigInt z_xi(std::uint64_t q, std::size_t s, std::size_t t, std::size_t xi);

struct BoundInputs {
    std::uint64_t q = 2;
    unsigned m = 1;
    std::size_t n = 0, d = 2, s = 1, t = 1;
    void check() const;
};

enum class BoundName { LRS, LA, LA1, LA2, LT, U };
const char* bound_name(BoundName b);
std::optional<BoundName> parse_bound_name(const std::string& s);

struct ProbBound {
    BoundName name;
    bool applicable = false;
    std::string validity;
    std::optional<BigRat> exact; // clamped value, when numerator and denominator fit 4096 bits
    double value = 0.0;          // clamped to [0, 1]
};

ProbBound bound(BoundName name, const BoundInputs& in);

} // namespace cwb
