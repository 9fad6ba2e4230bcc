#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace floodsim {

using RngStream = std::mt19937_64;

// SplitMix64 finalizer; full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent deterministic stream from a master seed and an
// ordered label tuple (e.g. value index, phase, snapshot, source). Identical
// labels give identical streams; distinct labels give unrelated ones.
inline RngStream derive_substream(std::uint64_t seed, std::span<const std::int64_t> labels) {
    std::uint64_t h = mix64(seed);
    for (std::int64_t label : labels) {
        h = mix64(h ^ mix64(static_cast<std::uint64_t>(label)));
    }
    return RngStream(h);
}

inline RngStream derive_substream(std::uint64_t seed, std::initializer_list<std::int64_t> labels) {
    return derive_substream(seed, std::span<const std::int64_t>(labels.begin(), labels.size()));
}

// Uniform draw on [0, 1): 53 random bits, so 1.0 is never returned.
inline double uniform01(RngStream& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Success test xi <= p on a half-open [0,1) draw. p = 0 is pinned to
// always-fail and p = 1 to always-succeed so the endpoints are exact.
inline bool chance(RngStream& g, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01(g) <= p;
}

// Same endpoint handling for a pre-drawn uniform, used by the coupled
// (common-random-numbers) flood path.
inline bool passes(double draw, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return draw <= p;
}

}  // namespace floodsim
