#include "cwb/error.hpp"
#include "cwb/netgap.hpp"

#include <doctest.h>

#include <cmath>

using namespace cwb;

namespace {

std::vector<CombNetParams> grid()
{
    std::vector<CombNetParams> out;
    for (std::int64_t h : {3, 4, 5, 6, 8})
        for (std::int64_t ell : {1, 2})
            for (std::int64_t eps : {0, 1, 2})
                for (std::int64_t alpha : {2, 3, 5})
                    for (std::int64_t t : {1, 3})
                        out.push_back({h, 50, alpha, ell, eps, 4, t});
    return out;
}

} // namespace

TEST_CASE("polynomials")
{
    const CombNetParams p{12, 800000, 20, 1, 2, 2, 1};
    CHECK(theta(p) == 11);
    CHECK(f_poly(p, 1) == (20 + 2 - 12) * 2 + (20 + 4 - 12) + 1);
    CHECK(f_poly(p, 3) == 10 * 2 * 9 + 12 * 3 + 1);
    const CombNetParams s{3, 10, 2, 2, 0, 2, 1};
    // max(2t, t) * (min(2t, t) - (3 - 2 - 0) t + 1) = 2t
    CHECK(g_poly(s, 1) == 2);
    CHECK(g_poly(s, 4) == 8);
    CHECK(gamma_exact() == BigRat(87, 25));
    CHECK(std::abs(static_cast<double>(beta(2)) - 1.0 / (2 * std::exp(1.0) * 3.48 * 2)) < 1e-12);
}

TEST_CASE("exact and log-domain representations agree")
{
    std::size_t compared = 0;
    for (const auto& p : grid()) {
        for (const auto& b : rmax_upper(p)) {
            CHECK_MESSAGE(representations_agree(b, 1e-9), b.name);
            compared += b.applicable && b.direct.has_value();
        }
        for (const auto& b : rmax_lower(p)) {
            CHECK_MESSAGE(representations_agree(b, 1e-9), b.name);
            compared += b.applicable && b.direct.has_value();
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("validity windows")
{
    // h <= ell + eps is outside every nontrivial window
    const CombNetParams trivial{2, 50, 3, 1, 1, 4, 1};
    for (const auto& b : rmax_upper(trivial))
        if (b.name != "thm_EK_1_ext")
            CHECK_MESSAGE(!b.applicable, b.name);
    for (const auto& b : rmax_lower(trivial))
        if (b.name == "cor_EK19")
            CHECK(!b.applicable);
    // alpha = 2 bounds only apply at alpha = 2
    const CombNetParams a3{4, 50, 3, 1, 1, 4, 1};
    for (const auto& b : rmax_upper(a3))
        if (b.name == "thm_imupbound_2" || b.name == "cor_imupperbound_2")
            CHECK(!b.applicable);
    CHECK_THROWS_AS(rmax_upper(CombNetParams{4, 50, 3, 1, 1, 6, 1}), Error);
    CHECK_THROWS_AS(qt_conditions(CombNetParams{4, 50, 1, 1, 1, 4, 1}, 5), Error);
    CHECK(!ek1_ext(5, 3, 4, 2, 2).applicable);
}

TEST_CASE("upper bounds dominate lower bounds")
{
    for (const auto& p : grid()) {
        const BestBound bb = best_bound(p);
        if (bb.upper.applicable && bb.lower.applicable)
            CHECK_MESSAGE(bb.lower.log2 <= bb.upper.log2 + 1e-9, p.h, " ", p.ell, " ", p.eps, " ", p.alpha);
    }
}

TEST_CASE("figure network curve data")
{
    const CombNetParams p{12, 800000, 20, 1, 2, 2, 1};
    const auto rows = qt_conditions(p, 20);
    REQUIRE(rows.size() == 20);
    for (const auto& r : rows) {
        REQUIRE(r.necessary_log2.has_value());
        REQUIRE(r.sufficient_log2.has_value());
        CHECK(*r.necessary_log2 <= *r.sufficient_log2);
        if (r.t > 1)
            CHECK(*r.necessary_log2 <= *rows[r.t - 2].necessary_log2);
    }
}

TEST_CASE("gap bounds are ordered")
{
    std::size_t checked = 0;
    for (std::int64_t h : {12, 14, 16})
        for (std::int64_t r : {1000, 100000, 800000, 10000000}) {
            for (std::int64_t eps : {1, 2}) {
                const CombNetParams p{h, r, 20, 1, eps, 2, 1};
                const GapResult g = gap_bounds(p);
                if (g.gap_lb && g.gap_ub) {
                    CHECK(*g.gap_lb <= *g.gap_ub);
                    ++checked;
                }
            }
        }
    CHECK(checked >= 20);
}
