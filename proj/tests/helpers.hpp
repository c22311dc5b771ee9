#pragma once

#include "cwb/gf.hpp"
#include "cwb/linalg.hpp"
#include "cwb/rng.hpp"

#include <vector>

namespace testutil {

using namespace cwb;

inline Elem rand_elem(const Field& F, Rng& rng) { return static_cast<Elem>(uniform(rng, F.order())); }

inline std::vector<Elem> rand_vec(const Field& F, std::size_t n, Rng& rng)
{
    std::vector<Elem> v(n);
    for (auto& x : v)
        x = rand_elem(F, rng);
    return v;
}

inline Mat rand_mat(const Field& F, std::size_t r, std::size_t c, Rng& rng)
{
    Mat M(r, c);
    for (auto& x : M.a)
        x = rand_elem(F, rng);
    return M;
}

} // namespace testutil
