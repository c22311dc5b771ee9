#include "cwb/error.hpp"
#include "cwb/metric.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cwb;
using namespace testutil;

TEST_CASE("weights")
{
    const auto F = Field::make(2, 3);
    const Elem g = F->gamma();
    const std::vector<Elem> v{1, g, F->add(1, g), 0, F->gpow(2)};
    CHECK(weight(*F, v, Metric::hamming) == 4);
    CHECK(weight(*F, v, Metric::rank) == 3);
    CHECK(weight(*F, v, Metric::sumrank, {{3, 2}}) == 3);
    CHECK(weight(*F, v, Metric::sumrank, {{2, 2, 1}}) == 2 + 1 + 1);
    CHECK(weight(*F, std::vector<Elem>(5, 0), Metric::rank) == 0);
    CHECK_THROWS_AS(weight(*F, v, Metric::sumrank, {{2, 2}}), Error);
}

TEST_CASE("weight ordering")
{
    const auto F = Field::make(3, 2);
    Rng rng = stream(1, 1);
    const OrderedPartition part{{2, 3, 1}};
    for (int k = 0; k < 200; ++k) {
        const auto v = rand_vec(*F, 6, rng);
        const auto wr = weight(*F, v, Metric::rank), ws = weight(*F, v, Metric::sumrank, part),
                   wh = weight(*F, v, Metric::hamming);
        CHECK(wr <= ws);
        CHECK(ws <= wh);
    }
}

TEST_CASE("rank counts")
{
    for (auto [m, n, q] : {std::tuple<std::size_t, std::size_t, std::uint64_t>{2, 3, 2}, {3, 3, 3}, {4, 2, 4}}) {
        BigInt total = 0;
        for (std::size_t r = 0; r <= std::min(m, n); ++r)
            total += rank_count(m, n, r, q);
        CHECK(total == ipow(BigInt(q), m * n));
        CHECK(ball_rank(m, n, std::min(m, n), q) == total);
    }
    CHECK(rank_count(2, 2, 1, 2) == 9);
    CHECK(ball_hamming(4, 1, 3) == 9);
    // sum-rank with unit parts is the Hamming metric over F_{q^m}
    CHECK(ball_sumrank(2, {{1, 1, 1}}, 2, 3) == ball_hamming(3, 2, 9));
}

TEST_CASE("brute-force distance of a Reed-Solomon code")
{
    const auto F = Field::make(7);
    const std::size_t n = 6, k = 3;
    Mat G(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            G(i, j) = F->pow(F->gpow(static_cast<long long>(j)), i);
    CHECK(min_distance_bruteforce(*F, G, Metric::hamming) == n - k + 1);
}

TEST_CASE("classical bounds")
{
    const auto b = classical_bounds(Metric::hamming, 7, 3, 2, 1);
    REQUIRE(b.size() == 3);
    CHECK(b[0].name == "singleton");
    CHECK(b[0].value == BigRat(32));
    CHECK(b[1].name == "sphere_packing");
    CHECK(b[1].value == BigRat(16));
    CHECK(b[2].name == "gilbert_varshamov");
    CHECK(b[2].value <= b[1].value);
}
