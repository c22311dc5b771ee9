#pragma once

#include "cwb/lrs.hpp"
#include "cwb/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cwb {

// Zero constraints G_{i,j} = 0 for j in Z_i (0-based column indices).
struct ZeroPattern {
    std::size_t n = 0, k = 0;
    std::vector<std::vector<std::size_t>> Z;
    void check() const;
};

// A violating Omega (0-based rows) or nothing when the GM-MSRD condition holds.
std::optional<std::vector<std::size_t>> gm_check(const ZeroPattern& pattern);
// max over nonempty Omega of |cap Z_i| + |Omega|.
std::size_t ktilde(const ZeroPattern& pattern);
ZeroPattern pad_pattern(const ZeroPattern& pattern);

enum class FieldRule {
    theorem,  // m >= max(k - 1 + log_q k, n_l)
    compact,  // m >= max(k, n_l)
};
unsigned field_size_bound(std::size_t k, std::uint64_t q, const std::vector<std::size_t>& lengths,
                          FieldRule rule = FieldRule::theorem);

struct Construction {
    LrsSpec spec;      // multipliers actually used
    Mat T, G_lrs, G;   // G = T * G_lrs
    std::size_t attempts = 0;
};

// Row i of T holds g_i * f_{Z_i}, with f_{Z_i} the minimal polynomial of the
// locators in Z_i and g_i a random monic polynomial of degree k-1-|Z_i|
// (g_i = 1 for padded rows). The first attempt uses spec's multipliers;
// later attempts resample them. Fails with Errc::guard after `budget` attempts.
Construction build_constrained_generator(const LrsSpec& spec, const ZeroPattern& pattern, Rng& rng,
                                         std::size_t budget = 64);
// Pads with empty rows up to ktilde, builds the [n, ktilde] generator and keeps the first k rows.
Construction build_subcode_generator(const LrsSpec& spec, const ZeroPattern& pattern, Rng& rng,
                                     std::size_t budget = 64);

struct NetworkInstance {
    std::size_t h = 0;
    std::vector<std::size_t> r;                    // message lengths
    std::vector<std::vector<std::size_t>> access;  // J_1..J_s, 0-based message indices
    std::size_t t = 0, rho = 0, ell = 1;
    void check() const;
};

struct DesignResult {
    std::vector<std::size_t> nJ;
    std::size_t n = 0, k = 0, ktilde = 0, d = 0;
    std::uint64_t q = 0;
    unsigned m = 0;
    std::vector<std::size_t> blocks;
    ZeroPattern pattern;
    bool constructed = false;
    std::string construction_note;
    Construction construction;
};

// Minimises sum n_J subject to, for every nonempty J' of [h],
// sum_{J meets J'} n_J >= sum_{i in J'} r_i + c, with c = 2t + rho (capacity)
// and c = 2 l t + rho (zero constraints).
std::vector<std::size_t> solve_design_ilp(const NetworkInstance& inst);
// Reference solver: enumerates every vector with entries up to the largest demand.
std::vector<std::size_t> solve_design_exhaustive(const NetworkInstance& inst);
bool design_feasible(const NetworkInstance& inst, const std::vector<std::size_t>& nJ, std::string* violated = nullptr);

ZeroPattern design_pattern(const NetworkInstance& inst, const std::vector<std::size_t>& nJ);
// Split n into l blocks at round(i n / l).
std::vector<std::size_t> split_blocks(std::size_t n, std::size_t ell);
std::uint64_t smallest_prime_power_at_least(std::uint64_t x);

// Construction runs when ktilde <= max_construct_k.
DesignResult distributed_design(const NetworkInstance& inst, std::uint64_t seed, bool construct = true,
                                std::size_t max_construct_k = 16);

// X = [blockdiag(I_{n_J}) | stacked C_J^T] over F_q, n x (n + m).
Mat lift(const Field& F, const std::vector<std::vector<Elem>>& codeword_blocks);

} // namespace cwb
