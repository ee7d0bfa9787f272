#pragma once

#include <cstdint>
#include <random>

namespace starcov {

// Default random engine for all Monte Carlo paths. One engine per worker;
// never shared across threads.
using Rng = std::mt19937_64;

// SplitMix64 step, used to decorrelate derived seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic per-stream seed: stream 0, 1, 2, ... of a master seed give
// independent engines regardless of evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    return splitmix64(master ^ splitmix64(stream));
}

inline Rng make_rng(std::uint64_t master, std::uint64_t stream = 0) {
    return Rng(derive_seed(master, stream));
}

} // namespace starcov
