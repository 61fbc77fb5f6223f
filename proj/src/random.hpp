#pragma once

#include <cstdint>

namespace pvsize::detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based uniform draw in [0, 1) keyed by (seed, stream, a, b, k).
constexpr double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t k) noexcept {
    std::uint64_t h = splitmix64(seed ^ splitmix64(stream));
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    h = splitmix64(h ^ k);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace pvsize::detail
