#include "cwb/bench.hpp"
#include "cwb/ildec.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cwb;
using namespace testutil;

TEST_CASE("decoding radius")
{
    CHECK(max_radius(3, 11) == 7);
    CHECK(max_radius(1, 11) == 5);
    CHECK(max_radius(5, 5) == 3);
}

TEST_CASE("burst sampling")
{
    const auto F = Field::make(2, 4);
    Rng rng = stream(1, 0);
    for (int k = 0; k < 100; ++k) {
        const BurstError b = sample_burst(*F, 3, 15, 5, rng, k % 2 == 1);
        REQUIRE(b.support.size() == 5);
        CHECK(std::is_sorted(b.support.begin(), b.support.end()));
        CHECK(std::adjacent_find(b.support.begin(), b.support.end()) == b.support.end());
        for (std::size_t j = 0; j < 5; ++j) {
            bool nz = false;
            for (std::size_t i = 0; i < 3; ++i) {
                nz |= b.E(i, j) != 0;
                if (k % 2)
                    CHECK(F->in_subfield(b.E(i, j)));
            }
            CHECK(nz);
        }
        const Mat full = b.full(15);
        CHECK(full.cols == 15);
    }
}

TEST_CASE("syndromes vanish on codewords")
{
    const auto spec = default_grs(Field::make(2, 4), 15, 7);
    Rng rng = stream(2, 0);
    const Mat C = random_interleaved_codeword(*spec.F, grs_generator(spec), 3, rng);
    for (auto x : syndromes(C, spec).a)
        CHECK(x == 0);
    CHECK(key_equation_matrix(syndromes(C, spec), 2).rows == 3 * (6 - 2));
    CHECK(key_equation_matrix(syndromes(C, spec), 2).cols == 2);
}

TEST_CASE("unique decoding radius always succeeds")
{
    for (auto code : {CodeKind::grs, CodeKind::alternant}) {
        ExperimentConfig cfg;
        cfg.code = code;
        cfg.q = 2;
        cfg.m = 4;
        cfg.d = 7;
        const Workload w(cfg);
        for (std::size_t s : {1, 2, 4})
            for (std::size_t t = 0; t <= 3; ++t)
                for (std::uint64_t k = 0; k < 30; ++k)
                    CHECK(run_trial(w, s, t, 5, k, false).outcome == Outcome::success);
    }
}

TEST_CASE("oracles agree with the decoder")
{
    for (auto [q, m, d] : {std::tuple<std::uint64_t, unsigned, std::size_t>{2, 5, 11}, {8, 2, 5}, {2, 4, 7}})
        for (auto code : {CodeKind::grs, CodeKind::alternant}) {
            ExperimentConfig cfg;
            cfg.code = code;
            cfg.q = q;
            cfg.m = m;
            cfg.d = d;
            const Workload w(cfg);
            for (std::size_t s : {1, 2, 3})
                for (std::size_t t = 1; t <= max_radius(s, d) + 2; ++t)
                    for (std::uint64_t k = 0; k < 8; ++k) {
                        const Trial tr = run_trial(w, s, t, 77, k, true);
                        const bool ok = tr.outcome == Outcome::success;
                        CHECK(ok == tr.rank_success);
                        CHECK(ok == tr.crux_success);
                    }
        }
}

TEST_CASE("beyond the radius the decoder declines")
{
    const auto spec = default_grs(Field::make(2, 4), 15, 5);
    Rng rng = stream(3, 0);
    const Mat C = random_interleaved_codeword(*spec.F, grs_generator(spec), 1, rng);
    const BurstError b = sample_burst(*spec.F, 1, 15, 6, rng);
    Mat R = C;
    const Mat Ef = b.full(15);
    for (std::size_t x = 0; x < R.a.size(); ++x)
        R.a[x] = spec.F->add(R.a[x], Ef.a[x]);
    const DecodeOutcome out = joint_decode(R, spec);
    CHECK(classify(out, C) != Outcome::success);
    CHECK(std::string(outcome_name(Outcome::miscorrection)) == "miscorrection");
}
