#pragma once

#include "cwb/bigint.hpp"
#include "cwb/gf.hpp"
#include "cwb/linalg.hpp"

#include <string>
#include <vector>

namespace cwb {

enum class Metric { hamming, rank, sumrank };

struct OrderedPartition {
    std::vector<std::size_t> parts;
    std::size_t n() const;
    void check(std::size_t len) const;
};

std::size_t weight(const Field& F, const std::vector<Elem>& v, Metric metric, const OrderedPartition& part = {});

// Minimum weight over all nonzero combinations sum_i u_i G_i with u_i drawn from
// `scalars` (the whole field when empty). Guarded by |scalars|^k <= 2^24.
std::size_t min_distance_bruteforce(const Field& F, const Mat& G, Metric metric, const OrderedPartition& part = {},
                                    const std::vector<Elem>& scalars = {});

// Number of m x n matrices over F_q of rank r.
BigInt rank_count(std::size_t m, std::size_t n, std::size_t r, std::uint64_t q);
BigInt ball_hamming(std::size_t n, std::size_t radius, const BigInt& alphabet);
BigInt ball_rank(std::size_t m, std::size_t n, std::size_t radius, std::uint64_t q);
// Ordered compositions s_1 + ... + s_l <= radius; guarded by l * radius <= 40.
BigInt ball_sumrank(std::size_t m, const OrderedPartition& part, std::size_t radius, std::uint64_t q);

struct BoundReport {
    std::string metric;
    std::string name;
    BigRat value;
    double log10 = 0.0;
};

// Singleton, sphere-packing and Gilbert-Varshamov bounds on the code size.
std::vector<BoundReport> classical_bounds(Metric metric, std::size_t n, std::size_t d, std::uint64_t q, unsigned m,
                                          const OrderedPartition& part = {});

const char* metric_name(Metric metric);

} // namespace cwb
