#pragma once

#include <cstdint>

namespace narygw {

// SplitMix64 finalizer. Full-avalanche mix of a 64-bit value.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Order-sensitive key combine, used to derive child keys from a parent key.
inline std::uint64_t combine_keys(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2)));
}

// Minimal counter-based generator. Cheap to construct, so every tree node can
// own one keyed by its position; the sampled tree is then a pure function of
// the key, independent of traversal order.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on (0,1); never returns an exact endpoint.
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }
};

} // namespace narygw
