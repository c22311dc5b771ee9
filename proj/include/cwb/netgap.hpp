#pragma once

#include "cwb/bigint.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cwb {

// (eps, ell)-N_{h, r, alpha*ell + eps} generalized combination network with a (q, t)-linear solution.
struct CombNetParams {
    std::int64_t h = 0, r = 0, alpha = 2, ell = 1, eps = 0;
    std::uint64_t q = 2;
    std::int64_t t = 1;
    void check() const;
};

constexpr double gamma_approx = 3.48;
BigRat gamma_exact();

std::int64_t theta(const CombNetParams& p);
BigFloat beta(std::int64_t alpha);
std::int64_t f_poly(const CombNetParams& p, std::int64_t t);
std::int64_t g_poly(const CombNetParams& p, std::int64_t t);

struct NetBound {
    std::string name;
    std::string kind; // "upper" or "lower"
    std::string validity;
    bool applicable = false;
    std::optional<BigRat> exact;    // rational forms, when the exponent fits
    std::optional<BigFloat> direct; // plain extended-precision value
    double log2 = 0.0;              // evaluated independently in the log domain
};

// |log2(direct) - log2| <= tol * max(1, |log2|); true when there is nothing to compare.
bool representations_agree(const NetBound& b, double tol = 1e-9);

std::vector<NetBound> rmax_upper(const CombNetParams& p);
std::vector<NetBound> rmax_lower(const CombNetParams& p);
// (alpha - 1) q^{max{k, n-k}(min{k, n-k} - delta + 1)}
NetBound ek1_ext(std::int64_t n, std::int64_t k, std::int64_t delta, std::int64_t alpha, std::uint64_t q);

struct QtRow {
    std::int64_t t = 0;
    std::optional<double> necessary_log2;  // q^t must be at least 2^this
    std::optional<double> sufficient_log2; // q^t at least 2^this guarantees a solution
};
// Uses p.h, p.r, p.alpha, p.ell, p.eps; p.q and p.t are ignored.
std::vector<QtRow> qt_conditions(const CombNetParams& p, std::int64_t T);

struct GapResult {
    bool lll_branch = false; // h >= 2 ell + eps
    std::optional<double> gap_ub, gap_lb;
    std::optional<double> A;          // A or B, depending on the branch
    std::optional<std::int64_t> t_A;  // t_A or t_B
    std::optional<std::int64_t> t_lb; // t_Delta or t_star
    std::optional<double> cor_ub, cor_lb; // closed forms, eps >= 1
    bool A_approx = false; // threshold beyond the prime-power search range
};
GapResult gap_bounds(const CombNetParams& p);

struct BestBound {
    std::string upper_name, lower_name;
    NetBound upper, lower;
};
// Regime table of the best known bounds on r_max.
BestBound best_bound(const CombNetParams& p);

} // namespace cwb
