#include "cwb/gf.hpp"
#include "cwb/linalg.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cwb;
using namespace testutil;

namespace {

// Schoolbook product of digit vectors modulo the field's defining polynomial.
Elem naive_mul(const Field& F, Elem a, Elem b)
{
    const std::uint64_t p = F.p();
    const unsigned n = F.degree();
    const auto& M = F.modulus();
    std::vector<std::uint64_t> da(n), db(n), prod(2 * n, 0);
    for (unsigned i = 0; i < n; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (unsigned i = 2 * n - 1; i >= n; --i) {
        const std::uint64_t c = prod[i];
        if (c == 0)
            continue;
        for (unsigned k = 0; k <= n; ++k)
            prod[i - n + k] = (prod[i - n + k] + (p - c) * M[k]) % p;
    }
    Elem out = 0, w = 1;
    for (unsigned i = 0; i < n; ++i, w *= p)
        out += prod[i] * w;
    return out;
}

} // namespace

TEST_CASE("prime powers")
{
    CHECK(prime_power(2) == std::pair<std::uint64_t, unsigned>{2, 1});
    CHECK(prime_power(9) == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(prime_power(1024) == std::pair<std::uint64_t, unsigned>{2, 10});
    CHECK(prime_power(12).first == 0);
    CHECK(prime_power(1).first == 0);
}

TEST_CASE("F_4 structure")
{
    const auto F = Field::make(2, 2);
    CHECK(F->order() == 4);
    CHECK(F->q() == 2);
    const Elem w = F->gamma();
    CHECK(F->mul(w, w) == F->add(w, 1));
    CHECK(F->pow(w, 3) == 1);
    CHECK(F->frob(w, 1) == F->mul(w, w));
    CHECK(Field::make(2, 2) == F);
}

TEST_CASE("multiplication agrees with schoolbook reduction")
{
    for (auto [q, m] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}, {4, 2}, {5, 2}, {9, 2}, {7, 1}, {8, 3}}) {
        const auto F = Field::make(q, m);
        Rng rng = stream(11, q * 100 + m);
        for (int k = 0; k < 300; ++k) {
            const Elem a = rand_elem(*F, rng), b = rand_elem(*F, rng);
            CHECK(F->mul(a, b) == naive_mul(*F, a, b));
        }
    }
}

TEST_CASE("field axioms, exhaustive on small fields")
{
    for (auto [q, m] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {4, 2}, {5, 1}}) {
        const auto F = Field::make(q, m);
        const Elem Q = F->order();
        for (Elem a = 0; a < Q; ++a) {
            CHECK(F->add(a, F->neg(a)) == 0);
            CHECK(F->sub(a, a) == 0);
            if (a != 0)
                CHECK(F->mul(a, F->inv(a)) == 1);
            for (Elem b = 0; b < Q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (Elem c = 0; c < Q; c += 3)
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            }
        }
    }
}

TEST_CASE("primitive element, logs and Frobenius")
{
    for (auto [q, m] : {std::pair<std::uint64_t, unsigned>{2, 5}, {3, 4}, {4, 3}, {16, 2}}) {
        const auto F = Field::make(q, m);
        const std::uint64_t Q = F->order();
        CHECK(F->gpow(static_cast<long long>(Q - 1)) == 1);
        std::uint64_t x = Q - 1;
        for (std::uint64_t p = 2; p * p <= x; ++p)
            if (x % p == 0) {
                CHECK(F->gpow(static_cast<long long>((Q - 1) / p)) != 1);
                while (x % p == 0)
                    x /= p;
            }
        if (x > 1)
            CHECK(F->gpow(static_cast<long long>((Q - 1) / x)) != 1);
        Rng rng = stream(3, Q);
        for (int k = 0; k < 100; ++k) {
            const Elem a = rand_elem(*F, rng);
            CHECK(F->frob(a, m) == a);
            CHECK(F->frob(a, 1) == F->pow(a, q));
            CHECK(F->frob(F->frob(a, 1), -1) == a);
            if (a != 0)
                CHECK(F->gpow(static_cast<long long>(F->log(a))) == a);
        }
    }
}

TEST_CASE("subfield and coordinates")
{
    const auto F = Field::make(4, 3);
    const auto& S = F->subfield();
    REQUIRE(S.size() == 4);
    for (auto a : S) {
        CHECK(F->in_subfield(a));
        for (auto b : S) {
            CHECK(F->in_subfield(F->add(a, b)));
            CHECK(F->in_subfield(F->mul(a, b)));
        }
    }
    Rng rng = stream(5, 0);
    for (int k = 0; k < 200; ++k) {
        const Elem a = rand_elem(*F, rng);
        const auto c = F->coords(a);
        REQUIRE(c.size() == 3);
        for (auto x : c)
            CHECK(F->in_subfield(x));
        CHECK(F->from_coords(c) == a);
    }
    // expand_matrix of the basis is the identity
    std::vector<Elem> basis{F->basis(0), F->basis(1), F->basis(2)};
    CHECK(expand(*F, basis) == identity(3));
    CHECK(rank_q(*F, basis) == 3);
    CHECK(rank_q(*F, {S[2], S[3], 0}) == 1);
}

TEST_CASE("linear algebra")
{
    const auto F = Field::make(3, 2);
    Rng rng = stream(9, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + uniform(rng, 5), c = 1 + uniform(rng, 6);
        Mat M = rand_mat(*F, r, c, rng);
        if (trial % 3 == 0 && r > 1) // force a dependent row
            for (std::size_t j = 0; j < c; ++j)
                M(r - 1, j) = F->add(M(0, j), M(r - 2, j));
        const std::size_t rk = rank(*F, M);
        const Mat K = kernel(*F, M);
        CHECK(rk + K.rows == c);
        for (std::size_t i = 0; i < K.rows; ++i) {
            const auto z = matvec(*F, M, K.row(i));
            for (auto x : z)
                CHECK(x == 0);
        }
        const auto x = rand_vec(*F, c, rng);
        const auto b = matvec(*F, M, x);
        const auto sol = solve(*F, M, b);
        REQUIRE(sol.has_value());
        CHECK(matvec(*F, M, sol->x) == b);
        CHECK(sol->kernel.rows == c - rk);
    }
    CHECK(rank(*F, identity(4)) == 4);
    Mat Z(2, 2);
    CHECK(!solve(*F, Z, {1, 0}).has_value());
}
