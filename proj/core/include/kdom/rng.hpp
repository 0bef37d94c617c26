#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace kdom {

/// All randomized solvers draw from mt19937_64, so a (graph, config) pair
/// maps to one reproducible stream.
using Rng = std::mt19937_64;

/// Default CLI seed; reproducible runs unless the caller opts into entropy.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// splitmix64 step (Steele et al.); used to spread seed material.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Trial seeds as a splitmix64 stream from `master`: seed i never depends on
/// how many seeds were requested, so extending a run keeps earlier trials.
inline std::vector<std::uint64_t> derive_seeds(std::uint64_t master, std::size_t count) {
    std::vector<std::uint64_t> seeds;
    seeds.reserve(count);
    std::uint64_t state = master;
    for (std::size_t i = 0; i < count; ++i) seeds.push_back(splitmix64(state));
    return seeds;
}

/// Uniform draw in [0, bound) by modulo; the 2^-64-scale bias is irrelevant
/// here and the result stays identical across standard libraries.
inline std::uint64_t draw_below(Rng& rng, std::uint64_t bound) {
    return rng() % bound;
}

}  // namespace kdom
