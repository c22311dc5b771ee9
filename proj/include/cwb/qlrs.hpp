#pragma once

#include "cwb/bigint.hpp"
#include "cwb/gf.hpp"
#include "cwb/linalg.hpp"
#include "cwb/rng.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace cwb {

// q = 2^ell (ell <= 31), local redundancy r in [1, q-1]. Enumerating routines need ell <= 12.
struct QlrsParams {
    unsigned ell = 2;
    std::uint64_t r = 1;
    std::uint64_t q() const { return std::uint64_t{1} << ell; }
    void check() const;
};

// Exponent of x^v modulo x^q - x.
std::uint64_t mod_star(std::uint64_t v, std::uint64_t q);

// x <=_2 y: the binary support of x is contained in that of y.
inline bool shadow(std::uint64_t x, std::uint64_t y) { return (x & ~y) == 0; }

bool is_good_monomial(std::uint64_t a, std::uint64_t b, const QlrsParams& p);
std::vector<std::pair<std::uint64_t, std::uint64_t>> good_monomials(const QlrsParams& p);
std::uint64_t dimension(const QlrsParams& p);

// Lifted RS codes (restriction to lines, vertical ones included).
bool is_good_monomial_lines(std::uint64_t a, std::uint64_t b, const QlrsParams& p);
std::uint64_t lrs_dimension(const QlrsParams& p);
// Smallest r giving a lifted RS code of dimension k, if any.
std::optional<std::uint64_t> lrs_r_for_dimension(unsigned ell, std::uint64_t k);
std::optional<std::uint64_t> qlrs_r_for_dimension(unsigned ell, std::uint64_t k);

struct IjReduction {
    std::uint64_t i = 0, j = 0;
    bool reduced = false; // the deduction branch was reached
};
// Bits are indexed from the least significant one: i_h has weight 2^(h-1).
IjReduction ij_reduce(unsigned ell, std::uint64_t i, std::uint64_t j);

// Exhaustive S_t(ell), t in {0,1,2}, and S*(ell).
bool in_S_t(std::uint64_t a, std::uint64_t b, unsigned t, const QlrsParams& p);
std::array<BigInt, 3> s_vector_exhaustive(const QlrsParams& p);
std::uint64_t s_star_exhaustive(const QlrsParams& p);

// Smallest ell with r < 2^ell.
unsigned recursion_start(std::uint64_t r);
// A^(ell - ell0) s(ell0) with s(ell0) enumerated; needs r < q/2 unless ell = ell0.
std::array<BigInt, 3> s_vector_recursive(const QlrsParams& p);

extern const double lambda1, lambda2, mu;
double s0_r1(double ell);
double s0_r3(double ell);

struct BadBounds {
    bool power_of_two = false;
    double lower = 0, upper = 0; // on |S*| / r^2
    bool strict = false;
};
// 1 <= r <= q/4, ell >= 2.
BadBounds bad_count_bounds(const QlrsParams& p);

struct DistanceBounds {
    std::uint64_t lower = 0, upper = 0;
};
DistanceBounds distance_bounds(const QlrsParams& p);

struct Monomial {
    std::uint64_t a = 0, b = 0;
    Elem coef = 0;
};
// Evaluations at (x, y), position x q + y.
std::vector<Elem> encode(const QlrsParams& p, const std::vector<Monomial>& f);
// Generator matrix whose rows evaluate the good monomials.
Mat evaluation_matrix(const QlrsParams& p);
// Dimension of { f : F_q^2 -> F_q | deg f|_phi < q - r for all quadratic phi }, by linear algebra.
std::uint64_t constraint_dimension(const QlrsParams& p);
std::uint64_t min_distance_bruteforce(const QlrsParams& p);

struct Recovery {
    bool recovered = false;
    Elem value = 0;
    std::uint64_t curves_tried = 0;
};
// `erased[pos]` marks erasures; word entries at erased positions are ignored.
Recovery local_recover(const QlrsParams& p, const std::vector<Elem>& word, const std::vector<bool>& erased,
                       std::uint64_t pos);

double lrs_fail_prob(std::uint64_t q, std::uint64_t r, double tau);

struct LocalSim {
    std::uint64_t trials = 0, failures = 0;
    double rate() const { return trials ? double(failures) / double(trials) : 0.0; }
    double sigma() const;
};
// Erase a uniformly chosen symbol plus each other one with probability tau; count trials where no
// curve through the symbol has at most r-1 other erasures.  Trial k uses stream(seed, k).
LocalSim simulate_local(const QlrsParams& p, double tau, std::uint64_t trials, std::uint64_t seed);
// Same experiment for lifted RS codes over the q+1 lines.
LocalSim simulate_local_lines(const QlrsParams& p, double tau, std::uint64_t trials, std::uint64_t seed);

} // namespace cwb
