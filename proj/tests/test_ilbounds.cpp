#include "cwb/ilbounds.hpp"
#include "cwb/linalg.hpp"
#include "cwb/metric.hpp"

#include <doctest.h>

#include <map>

using namespace cwb;

namespace {

// Every s x t matrix over the prime field F_q, columns as integers in [0, q^s).
template <class Fn>
void for_each_matrix(std::uint64_t q, std::size_t s, std::size_t t, Fn fn)
{
    std::uint64_t Qs = 1;
    for (std::size_t i = 0; i < s; ++i)
        Qs *= q;
    std::vector<std::uint64_t> cols(t, 0);
    for (;;) {
        fn(cols, Qs);
        std::size_t i = 0;
        while (i < t && ++cols[i] == Qs)
            cols[i++] = 0;
        if (i == t)
            return;
    }
}

// Projective class of a nonzero column: the first nonzero digit scaled to 1.
std::uint64_t proj(std::uint64_t c, std::uint64_t q, std::size_t s, const Field& F)
{
    std::vector<Elem> d(s);
    for (std::size_t i = 0; i < s; ++i, c /= q)
        d[i] = c % q;
    Elem lead = 0;
    for (auto x : d)
        if (x) {
            lead = x;
            break;
        }
    const Elem li = F.inv(lead);
    std::uint64_t out = 0, w = 1;
    for (auto x : d) {
        out += F.mul(x, li) * w;
        w *= q;
    }
    return out;
}

} // namespace

TEST_CASE("kopt")
{
    CHECK(kopt_singleton(7, 3) == 5);
    CHECK(kopt_hamming(2, 7, 3) == 4);
    CHECK(kopt(2, 7, 3) == 4);
    CHECK(kopt(2, 15, 5) <= 8);
    CHECK(kopt(2, 8, 5) <= kopt_plotkin(2, 8, 5));
    CHECK(kopt_griesmer(2, 7, 4) == 3);
    CHECK(kopt(2, 7, 3, KoptPolicy::singleton) == 5);
}

TEST_CASE("convex sum maximisation")
{
    CHECK(maximize_convex_sum(2, 2, 3, 6, 2) == BigRat(12));
    CHECK(maximize_convex_sum(1, 3, 4, 10, 2) == BigRat(36));
    CHECK_THROWS(maximize_convex_sum(2, 2, 3, 100, 2));
}

TEST_CASE("matrix counts against enumeration")
{
    for (std::uint64_t q : {2, 3}) {
        const auto F = Field::make(q);
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t t = 1; t <= 3; ++t) {
                if (q == 3 && s * t > 6)
                    continue;
                std::map<std::size_t, std::uint64_t> all, nz;
                for_each_matrix(q, s, t, [&](const std::vector<std::uint64_t>& cols, std::uint64_t) {
                    Mat M(s, t);
                    bool zero_col = false;
                    for (std::size_t j = 0; j < t; ++j) {
                        std::uint64_t c = cols[j];
                        zero_col |= c == 0;
                        for (std::size_t i = 0; i < s; ++i, c /= q)
                            M(i, j) = c % q;
                    }
                    const std::size_t r = rank(*F, M);
                    ++all[r];
                    if (!zero_col)
                        ++nz[r];
                });
                BigInt sumN = 0;
                for (std::size_t r = 0; r <= std::min(s, t); ++r) {
                    const MatrixCounts c = count_matrices(s, t, r, q);
                    CHECK(c.M == all[r]);
                    CHECK(c.N == nz[r]);
                    sumN += c.N;
                }
                CHECK(sumN == ipow(ipow(BigInt(q), s) - 1, t));
            }
    }
}

TEST_CASE("Z_xi against enumeration")
{
    for (std::uint64_t q : {2, 3}) {
        const auto F = Field::make(q);
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t t = 1; t <= 4; ++t) {
                if (q == 3 && s * t > 8)
                    continue;
                std::map<std::size_t, std::uint64_t> count;
                for_each_matrix(q, s, t, [&](const std::vector<std::uint64_t>& cols, std::uint64_t) {
                    std::map<std::uint64_t, std::size_t> cls;
                    for (auto c : cols) {
                        if (c == 0)
                            return;
                        ++cls[proj(c, q, s, *F)];
                    }
                    std::vector<bool> hit(t + 1, false);
                    for (auto [k, v] : cls)
                        hit[v] = true;
                    for (std::size_t xi = 1; xi <= t; ++xi)
                        count[xi] += hit[xi];
                });
                for (std::size_t xi = 1; xi <= t; ++xi)
                    CHECK_MESSAGE(z_xi(q, s, t, xi) == count[xi], "q=", q, " s=", s, " t=", t, " xi=", xi);
            }
    }
}

TEST_CASE("bound properties")
{
    for (std::uint64_t q : {2, 8})
        for (unsigned m : {2, 5}) {
            const std::size_t n = std::min<std::size_t>(63, static_cast<std::size_t>(std::pow(q, m)) - 1);
            for (std::size_t d : {5, 11}) {
                if (d > n)
                    continue;
                for (std::size_t s : {1, 2, 3, 5}) {
                    double prev = 1.0;
                    for (std::size_t t = 1; t <= d; ++t) {
                        const BoundInputs in{q, m, n, d, s, t};
                        std::map<BoundName, ProbBound> b;
                        for (auto name : {BoundName::LRS, BoundName::LA, BoundName::LA1, BoundName::LA2, BoundName::LT,
                                          BoundName::U})
                            b[name] = bound(name, in);
                        for (auto& [k, v] : b) {
                            CHECK(v.value >= 0);
                            CHECK(v.value <= 1);
                        }
                        if (b[BoundName::LA].applicable && b[BoundName::LA2].applicable)
                            CHECK(b[BoundName::LA2].value <= b[BoundName::LA].value + 1e-15);
                        if (b[BoundName::LA].applicable && b[BoundName::U].applicable)
                            CHECK(b[BoundName::LA].value <= b[BoundName::U].value + 1e-12);
                        CHECK(b[BoundName::LRS].value <= prev + 1e-15);
                        prev = b[BoundName::LRS].value;
                    }
                }
            }
        }
}

TEST_CASE("bound names")
{
    for (auto name : {BoundName::LRS, BoundName::LA, BoundName::LA1, BoundName::LA2, BoundName::LT, BoundName::U})
        CHECK(parse_bound_name(bound_name(name)) == name);
    CHECK(!parse_bound_name("XX").has_value());
}
