#pragma once

#include <cstdint>
#include <random>

namespace cwb {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream for trial `index` under `seed`.
inline Rng stream(std::uint64_t seed, std::uint64_t index)
{
    return Rng(splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

// Uniform integer in [0, n); rejection keeps it exact and platform independent.
inline std::uint64_t uniform(Rng& rng, std::uint64_t n)
{
    if (n <= 1)
        return 0;
    const std::uint64_t lim = (~0ULL) - ((~0ULL) % n + 1) % n;
    for (;;) {
        std::uint64_t x = rng();
        if (x <= lim)
            return x % n;
    }
}

inline double uniform01(Rng& rng) { return (rng() >> 11) * (1.0 / 9007199254740992.0); }

} // namespace cwb
