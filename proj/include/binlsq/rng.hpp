// Deterministic randomness helpers. All draws route through mt19937_64
// plus fixed bit manipulation, so streams are identical across platforms
// and standard-library versions.
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "binlsq/matrix.hpp"

namespace binlsq {

// splitmix64 step: mixes a 64-bit counter into a well-scrambled word.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent per-trial seed derived from (base, level, trial). Chaining
// three splitmix64 steps decorrelates nearby indices.
inline std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t level_index,
                                std::size_t trial_index) {
    std::uint64_t s = base_seed;
    splitmix64(s);
    s ^= 0x1000193ULL * static_cast<std::uint64_t>(level_index + 1);
    splitmix64(s);
    s ^= 0x100000001b3ULL * static_cast<std::uint64_t>(trial_index + 1);
    return splitmix64(s);
}

// Uniform double in [0, 1) with 53 random bits. Avoids
// std::uniform_real_distribution, whose output differs across library
// implementations.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline BinaryVector random_bits(std::mt19937_64& gen, std::size_t n) {
    BinaryVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<int>(gen() & 1u);
    return x;
}

}  // namespace binlsq
