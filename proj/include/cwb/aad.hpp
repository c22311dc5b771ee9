#pragma once

#include "cwb/bigint.hpp"
#include "cwb/gf.hpp"
#include "cwb/linalg.hpp"
#include "cwb/rng.hpp"

#include <optional>
#include <vector>

namespace cwb {

// k-dimensional subspaces of F_q^n given by k x n generator matrices.
struct AadFamily {
    std::size_t n = 0, k = 0;
    FieldPtr F;
    std::vector<Mat> gens;
    std::optional<BigInt> L; // guaranteed by the construction (k <= 2)
};

// L(n,1) = n-1, L(n,2) = 1 + 2(n-2)(2n-6).
BigInt aad_guarantee(std::size_t n, std::size_t k);

// Parity-check matrix of the RS[n-k-1, n-2k] code: rows (gamma^{r c})_c, r = 0..k-2.
Mat aad_rs_parity(const Field& F, std::size_t n, std::size_t k);
// v_{i,t} rows for codeword c.
Mat aad_subspace(const Field& F, std::size_t n, std::size_t k, const std::vector<Elem>& c);

// Needs q >= n k, n > 2k and a family of at most 2^20 members.
AadFamily aad_construct(std::size_t n, std::size_t k, std::uint64_t q);

bool verify_spread(const AadFamily& fam);

struct AadCheck {
    bool ok = true;
    BigInt worst = 0;       // largest number of members met by an affine u + S_i
    std::uint64_t tested = 0; // (i, u) pairs examined
};
// Exhaustive over all cosets u + S_i with u not in S_i (q^n <= 2^22).
AadCheck verify_aad_exhaustive(const AadFamily& fam, const BigInt& L);
// `samples` pairs (i, u) with i uniform and u uniform outside S_i; pair k uses stream(seed, k).
AadCheck verify_aad_sampled(const AadFamily& fam, const BigInt& L, std::uint64_t samples, std::uint64_t seed);

struct AadBounds {
    BigRat upper;            // 1 + L (q^{n-k} - 1)/(q^k - 1)
    double lower_exponent;   // n - 2k - (n-k)(k+1)/(L+1)
    double lower;            // q^{lower_exponent}, up to the asymptotic (1 - o(1)) factor
};
AadBounds aad_bounds(std::size_t n, std::size_t k, const BigInt& L, std::uint64_t q);

} // namespace cwb
