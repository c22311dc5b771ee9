#include "cwb/error.hpp"
#include "cwb/support.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cwb;
using namespace testutil;

namespace {

// Direct evaluation of the condition over every nonempty row subset.
bool gm_holds_bruteforce(const ZeroPattern& p)
{
    const std::size_t k = p.Z.size();
    for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
        std::vector<bool> in(p.n, true);
        std::size_t omega = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1))
                continue;
            ++omega;
            std::vector<bool> row(p.n, false);
            for (auto j : p.Z[i])
                row[j] = true;
            for (std::size_t j = 0; j < p.n; ++j)
                in[j] = in[j] && row[j];
        }
        if (std::count(in.begin(), in.end(), true) + omega > p.k)
            return false;
    }
    return true;
}

ZeroPattern random_pattern(std::size_t n, std::size_t k, std::size_t max_zeros, Rng& rng)
{
    ZeroPattern p{n, k, {}};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> cols(n);
        for (std::size_t j = 0; j < n; ++j)
            cols[j] = j;
        std::shuffle(cols.begin(), cols.end(), rng);
        cols.resize(uniform(rng, max_zeros + 1));
        std::sort(cols.begin(), cols.end());
        p.Z.push_back(cols);
    }
    return p;
}

NetworkInstance toy(std::size_t ell)
{
    return NetworkInstance{4, {1, 3, 2, 3}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 2, 2, ell};
}

} // namespace

TEST_CASE("GM-MSRD condition agrees with subset enumeration")
{
    Rng rng = stream(1, 0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 3 + uniform(rng, 6), k = 1 + uniform(rng, 5);
        const auto p = random_pattern(n, k, std::min<std::size_t>(k, n), rng);
        CHECK(!gm_check(p).has_value() == gm_holds_bruteforce(p));
        CHECK((ktilde(p) <= p.k) == gm_holds_bruteforce(p));
    }
}

TEST_CASE("ktilde and padding")
{
    const ZeroPattern p{6, 3, {{0, 1}, {0, 1}, {}}};
    CHECK(ktilde(p) == 4); // rows {0,1}: 2 + 2
    CHECK(gm_check(p).has_value());
    CHECK_THROWS_AS(pad_pattern(p), Error);
    const ZeroPattern ok{6, 4, {{0, 1}, {0, 1}, {}, {5}}};
    CHECK(ktilde(ok) == 4);
    const ZeroPattern padded = pad_pattern(ok);
    REQUIRE(padded.Z.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(padded.Z[i].size() == 3);
        CHECK(std::includes(padded.Z[i].begin(), padded.Z[i].end(), ok.Z[i].begin(), ok.Z[i].end()));
    }
    CHECK(!gm_check(padded).has_value());
}

TEST_CASE("field size rules")
{
    CHECK(field_size_bound(9, 4, {8, 7, 8}, FieldRule::compact) == 9);
    CHECK(field_size_bound(9, 4, {8, 7, 8}, FieldRule::theorem) >= 9);
    CHECK(field_size_bound(2, 2, {5}, FieldRule::compact) == 5);
}

TEST_CASE("constrained generator has exactly the prescribed zeros")
{
    const ZeroPattern p{6, 3, {{0, 1}, {2, 3}, {4}}};
    REQUIRE(!gm_check(p).has_value());
    const auto spec = default_lrs(Field::make(4, 3), {3, 3}, 3);
    Rng rng = stream(2, 0);
    const Construction c = build_constrained_generator(spec, p, rng);
    const Field& F = *c.spec.F;
    CHECK(rank(F, c.T) == 3);
    CHECK(c.G == matmul(F, c.T, c.G_lrs));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const bool prescribed = std::find(p.Z[i].begin(), p.Z[i].end(), j) != p.Z[i].end();
            CHECK((c.G(i, j) == 0) == prescribed);
        }
    // same row space as the LRS code
    CHECK(same_row_space(F, c.G, c.G_lrs));
}

TEST_CASE("violating pattern is rejected")
{
    const ZeroPattern p{6, 2, {{0, 1}, {0, 1}}};
    REQUIRE(gm_check(p).has_value());
    const auto spec = default_lrs(Field::make(4, 3), {3, 3}, 2);
    Rng rng = stream(3, 0);
    CHECK_THROWS_AS(build_constrained_generator(spec, p, rng), Error);
}

TEST_CASE("design ILP matches exhaustive search")
{
    for (std::size_t ell : {1, 2}) {
        NetworkInstance inst{3, {1, 2, 1}, {{0, 1}, {1, 2}, {0, 2}}, 1, 1, ell};
        const auto a = solve_design_ilp(inst), b = solve_design_exhaustive(inst);
        CHECK(design_feasible(inst, a));
        CHECK(design_feasible(inst, b));
        std::size_t sa = 0, sb = 0;
        for (auto x : a)
            sa += x;
        for (auto x : b)
            sb += x;
        CHECK(sa == sb);
    }
}

TEST_CASE("toy network designs")
{
    const std::size_t expect_n[] = {15, 19, 23}, expect_d[] = {7, 11, 15};
    for (std::size_t ell = 1; ell <= 3; ++ell) {
        const DesignResult r = distributed_design(toy(ell), 1, false);
        CHECK(r.n == expect_n[ell - 1]);
        CHECK(r.ktilde == 9);
        CHECK(r.d == expect_d[ell - 1]);
        CHECK(design_feasible(toy(ell), r.nJ));
    }
    const DesignResult r3 = distributed_design(toy(3), 1, false);
    CHECK(r3.blocks == std::vector<std::size_t>{8, 7, 8});
    CHECK(r3.q == 4);
    CHECK(r3.m == 9);
    CHECK(split_blocks(23, 3) == std::vector<std::size_t>{8, 7, 8});
    CHECK(smallest_prime_power_at_least(3) == 3);
    CHECK(smallest_prime_power_at_least(6) == 7);
    CHECK(smallest_prime_power_at_least(15) == 16);
}

TEST_CASE("lift")
{
    const auto F = Field::make(3);
    const Mat X = lift(*F, {{1, 2}, {0, 1, 1}});
    CHECK(X.rows == 5);
    CHECK(X.cols == 5 + 1);
    CHECK(rank(*F, X) == 5);
}

TEST_CASE("design parameter tables")
{
    struct Row {
        std::vector<std::vector<std::size_t>> access;
        std::size_t ell, n, k, d;
        std::uint64_t q;
        unsigned m;
    };
    const std::vector<std::vector<std::size_t>> triples{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    const std::vector<std::vector<std::size_t>> singles{{0}, {1}, {2}, {3}};
    const std::vector<std::vector<std::size_t>> pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    const Row rows[] = {
        {triples, 1, 15, 9, 7, 2, 15},  {triples, 2, 19, 9, 11, 3, 10}, {triples, 3, 23, 9, 15, 4, 9},
        {triples, 4, 27, 9, 19, 5, 9},  {triples, 5, 33, 11, 23, 7, 11}, {triples, 6, 38, 12, 27, 7, 12},
        {triples, 7, 43, 13, 31, 8, 13}, {singles, 1, 33, 27, 7, 2, 33}, {singles, 2, 49, 39, 11, 3, 39},
        {singles, 3, 65, 51, 15, 4, 51}, {pairs, 1, 17, 11, 7, 2, 17},   {pairs, 2, 25, 15, 11, 3, 15},
        {pairs, 3, 33, 19, 15, 4, 19},
    };
    for (const auto& row : rows) {
        const NetworkInstance inst{4, {1, 3, 2, 3}, row.access, 2, 2, row.ell};
        const DesignResult r = distributed_design(inst, 1, false);
        CHECK(r.n == row.n);
        CHECK(r.ktilde == row.k);
        CHECK(r.d == row.d);
        CHECK(r.q == row.q);
        CHECK(r.m == row.m);
        CHECK(design_feasible(inst, r.nJ));
    }
}
