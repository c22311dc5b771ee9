#include "cwb/error.hpp"
#include "cwb/qlrs.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace cwb;
using namespace testutil;

TEST_CASE("mod* and shadows")
{
    CHECK(mod_star(0, 8) == 0);
    CHECK(mod_star(7, 8) == 7);
    CHECK(mod_star(8, 8) == 1);
    CHECK(mod_star(14, 8) == 7);
    CHECK(mod_star(15, 8) == 1);
    CHECK(shadow(5, 7));
    CHECK(!shadow(5, 6));
}

TEST_CASE("ij reduction")
{
    const IjReduction r = ij_reduce(4, 4, 10);
    CHECK(r.reduced);
    CHECK(r.i == 0);
    CHECK(r.j == 2);
    CHECK(!is_good_monomial(12, 14, {4, 2}));
}

TEST_CASE("good-monomial dimension equals the constraint kernel")
{
    const std::uint64_t q4[] = {5, 2, 1};
    for (std::uint64_t r = 1; r <= 3; ++r) {
        const QlrsParams p{2, r};
        CHECK(dimension(p) == q4[r - 1]);
        CHECK(constraint_dimension(p) == q4[r - 1]);
        CHECK(rank(*Field::make(4), evaluation_matrix(p)) == q4[r - 1]);
    }
    const std::uint64_t q8[] = {25, 15, 10, 6, 4, 2, 1};
    for (std::uint64_t r = 1; r <= 7; ++r) {
        const QlrsParams p{3, r};
        CHECK(dimension(p) == q8[r - 1]);
        CHECK(constraint_dimension(p) == q8[r - 1]);
        CHECK(rank(*Field::make(8), evaluation_matrix(p)) == q8[r - 1]);
    }
}

TEST_CASE("lifted RS dimensions and matched redundancy")
{
    const std::uint64_t q4[] = {7, 3, 1}, q8[] = {37, 24, 16, 10, 6, 3, 1};
    for (std::uint64_t r = 1; r <= 3; ++r)
        CHECK(lrs_dimension({2, r}) == q4[r - 1]);
    for (std::uint64_t r = 1; r <= 7; ++r)
        CHECK(lrs_dimension({3, r}) == q8[r - 1]);
    CHECK(qlrs_r_for_dimension(3, 10) == 3u);
    CHECK(lrs_r_for_dimension(3, 10) == 4u);
    CHECK(qlrs_r_for_dimension(3, 6) == 4u);
    CHECK(lrs_r_for_dimension(3, 6) == 5u);
    CHECK(!lrs_r_for_dimension(3, 11).has_value());
}

TEST_CASE("S vectors")
{
    const long long r1s0[] = {3, 10, 34, 116, 396, 1352, 4616}, r1s1[] = {1, 4, 14, 48, 164, 560, 1912};
    for (unsigned ell = 1; ell <= 6; ++ell) {
        const QlrsParams p{ell, 1};
        const auto ex = s_vector_exhaustive(p);
        CHECK(ex[0] == r1s0[ell - 1]);
        CHECK(ex[1] == r1s1[ell - 1]);
        CHECK(ex[2] == 0);
        CHECK(s_vector_recursive(p) == ex);
    }
    CHECK(s_vector_recursive({7, 1})[0] == 4616);
    CHECK(s_vector_recursive({7, 1})[1] == 1912);
    const long long r3s0[] = {15, 53, 183, 627, 2143}, r3s1[] = {8, 24, 78, 262, 890};
    for (unsigned ell = 2; ell <= 6; ++ell) {
        const QlrsParams p{ell, 3};
        const auto ex = s_vector_exhaustive(p);
        CHECK(ex[0] == r3s0[ell - 2]);
        CHECK(ex[1] == r3s1[ell - 2]);
        CHECK(ex[2] == 1);
        CHECK(s_vector_recursive(p) == ex);
    }
    CHECK(recursion_start(1) == 1);
    CHECK(recursion_start(3) == 2);
    CHECK(recursion_start(4) == 3);
}

TEST_CASE("closed forms track the recursion")
{
    for (unsigned ell = 2; ell <= 20; ++ell) {
        const double rec1 = static_cast<double>(s_vector_recursive({ell, 1})[0]);
        const double rec3 = static_cast<double>(s_vector_recursive({ell, 3})[0]);
        CHECK(std::abs(s0_r1(ell) - rec1) <= 1e-6 * rec1);
        CHECK(std::abs(s0_r3(ell) - rec3) <= 1e-6 * rec3);
    }
}

TEST_CASE("bad-monomial bounds bracket the count")
{
    for (std::uint64_t r = 1; r <= 8; ++r) {
        const QlrsParams p{5, r};
        const BadBounds b = bad_count_bounds(p);
        const double ratio = double(s_star_exhaustive(p)) / double(r * r);
        CHECK(b.lower <= ratio);
        CHECK(ratio <= b.upper);
    }
    CHECK(s_star_exhaustive({5, 1}) == 463);
    CHECK(s_star_exhaustive({5, 8}) == 13 * 64);
    CHECK_THROWS_AS(bad_count_bounds({5, 9}), Error);
}

TEST_CASE("minimum distance")
{
    const QlrsParams p{2, 1};
    const DistanceBounds db = distance_bounds(p);
    CHECK(db.lower == 5);
    CHECK(db.upper == 8);
    CHECK(min_distance_bruteforce(p) == 8);
}

TEST_CASE("local recovery")
{
    const QlrsParams p{3, 2};
    const auto F = Field::make(8);
    const auto good = good_monomials(p);
    Rng rng = stream(4, 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Monomial> f;
        for (auto [a, b] : good)
            f.push_back({a, b, rand_elem(*F, rng)});
        const auto word = encode(p, f);
        REQUIRE(word.size() == 64);
        std::vector<bool> erased(64, false);
        const std::uint64_t pos = uniform(rng, 64);
        erased[pos] = true;
        for (int e = 0; e < 6; ++e)
            erased[uniform(rng, 64)] = true;
        const Recovery rec = local_recover(p, word, erased, pos);
        if (rec.recovered)
            CHECK(rec.value == word[pos]);
    }
    std::vector<Monomial> bad{{7, 7, 1}};
    CHECK_THROWS_AS(encode(p, bad), Error);
}

TEST_CASE("local failure simulation")
{
    CHECK(lrs_fail_prob(8, 4, 0.0) == 0.0);
    const LocalSim a = simulate_local({3, 3}, 0.5, 5000, 9);
    const LocalSim b = simulate_local({3, 3}, 0.5, 5000, 9);
    CHECK(a.failures == b.failures);
    CHECK(a.rate() <= lrs_fail_prob(8, 4, 0.5) + 3 * a.sigma() + 1e-3);
    const LocalSim lines = simulate_local_lines({3, 4}, 0.5, 20000, 9);
    CHECK(std::abs(lines.rate() - lrs_fail_prob(8, 4, 0.5)) <= 4 * std::sqrt(lrs_fail_prob(8, 4, 0.5) / 20000) + 1e-4);
}
