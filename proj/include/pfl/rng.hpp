#pragma once

#include <cstdint>

namespace pfl::rng {

// Counter-based pseudo-random primitives (splitmix64 finalizer).  Every random
// quantity in the library is a pure function of (key, counter), which makes
// simulation results independent of evaluation order and worker-thread count.
// Statistical quality is fine for Monte Carlo; this is not a cryptographic RNG.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// Derives a child key; used to give frames / streams independent keys.
inline constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t stream) {
    return mix64(key + kGolden * (stream + 1));
}

// Stream tags that split one frame key into independent sub-streams.  Keeping
// them in one place guarantees the channel, fault, and payload draws never
// collide even though they run off the same per-frame key.
inline constexpr std::uint64_t kStreamChannel = 1;
inline constexpr std::uint64_t kStreamFault = 2;
inline constexpr std::uint64_t kStreamPayload = 3;

// Raw 64 random bits for (key, counter).
inline constexpr std::uint64_t bits(std::uint64_t key, std::uint64_t counter) {
    return mix64(key ^ (counter * kGolden + 0x632BE59BD9B4E019ULL));
}

// Uniform double in [0, 1) using the top 53 bits.
inline double uniform01(std::uint64_t key, std::uint64_t counter) {
    return static_cast<double>(bits(key, counter) >> 11) * 0x1.0p-53;
}

inline bool bernoulli(double prob, std::uint64_t key, std::uint64_t counter) {
    return uniform01(key, counter) < prob;
}

}  // namespace pfl::rng
