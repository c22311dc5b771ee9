#pragma once

#include "cwb/grscode.hpp"
#include "cwb/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cwb {

// Burst error: s x t matrix E without zero columns on the support (0-based, increasing).
struct BurstError {
    std::vector<std::size_t> support;
    Mat E;
    // The s x n error matrix.
    Mat full(std::size_t n) const;
};

// E uniform over matrices without zero columns, entries from F (or from F_q when `subfield`).
BurstError sample_burst_on(const Field& F, std::size_t s, const std::vector<std::size_t>& support, Rng& rng,
                           bool subfield = false);
// Support uniform over t-subsets of [n].
BurstError sample_burst(const Field& F, std::size_t s, std::size_t n, std::size_t t, Rng& rng, bool subfield = false);

// s random rows from the row space of `basis`, coefficients drawn from `scalars` (all of F when empty).
Mat random_interleaved_codeword(const Field& F, const Mat& basis, std::size_t s, Rng& rng,
                                const std::vector<Elem>& scalars = {});

// R (H diag v)^T, an s x (d-1) matrix.
Mat syndromes(const Mat& R, const GrsSpec& spec);

// S(t): rows (s_{i,j}, ..., s_{i,j+t-1}) for every row i and j = 1..d-1-t.
Mat key_equation_matrix(const Mat& S, std::size_t t);

enum class Outcome { success, miscorrection, failure };
const char* outcome_name(Outcome o);

struct DecodeOutcome {
    bool decoded = false;
    Mat word;             // R - E_hat when decoded
    std::size_t t_star = 0;
    std::string reason;   // why decoding failed
};

// Largest number of burst errors the joint decoder may correct: floor(s (d-1) / (s+1)).
std::size_t max_radius(std::size_t s, std::size_t d);

DecodeOutcome joint_decode(const Mat& R, const GrsSpec& spec);
Outcome classify(const DecodeOutcome& out, const Mat& C_true);

// Success iff rank S(t) = t for t = |supp(E_full)|.
bool rank_oracle(const Mat& E_full, const GrsSpec& spec);
// Success iff the stacked H diag(e_i), with H the parity check of GRS over the support locators
// and designed distance d - t, has trivial kernel.
bool crux_oracle(const Mat& E, const std::vector<std::size_t>& support, const GrsSpec& spec);

} // namespace cwb
