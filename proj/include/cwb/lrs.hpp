#pragma once

#include "cwb/gf.hpp"
#include "cwb/linalg.hpp"
#include "cwb/metric.hpp"
#include "cwb/skew.hpp"

#include <vector>

namespace cwb {

struct LrsSpec {
    FieldPtr F;
    std::vector<Elem> a;               // block representatives
    std::vector<std::vector<Elem>> b;  // column multipliers per block
    std::size_t k = 1;

    std::size_t blocks() const { return a.size(); }
    std::size_t n() const;
    OrderedPartition partition() const;
    // Throws naming the offending block.
    void check() const;
};

// a_l = gamma^(l-1); block l multipliers gamma^(l-1), ..., gamma^(l-2+n_l).
LrsSpec default_lrs(FieldPtr F, const std::vector<std::size_t>& parts, std::size_t k);

// a_l * beta_{l,t}^(q-1), block by block.
std::vector<Elem> code_locators(const LrsSpec& spec);
// Row i, block l, column t: N_i(a_l) * beta_{l,t}^(q^i).
Mat generator_matrix(const LrsSpec& spec);
Mat generator_matrix(const LrsSpec& spec, std::size_t k);

std::vector<Elem> encode(const LrsSpec& spec, const std::vector<Elem>& message);
// b * (f(alpha))_{alpha in L} for f = sum_i message_i X^i.
std::vector<Elem> encode_eval(const LrsSpec& spec, const std::vector<Elem>& message);

bool is_msrd(const LrsSpec& spec);

} // namespace cwb
