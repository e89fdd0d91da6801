#ifndef AWTC_RNG_HPP
#define AWTC_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace awtc {

/// All experiment randomness flows from one user seed through this mixer:
/// derived = mix(seed, fnv1a(tag), index). Parallel trials use disjoint
/// derived seeds without coordination.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    return splitmix64(splitmix64(seed ^ fnv1a(tag)) ^ index);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    return std::mt19937_64(derive_seed(seed, tag, index));
}

/// Uniform integer in [0, bound) without std::uniform_int_distribution, so
/// output streams are identical across standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // rejection sampling on the top multiple of bound
    std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} - (~std::uint64_t{0} % bound));
    std::uint64_t x;
    do { x = rng(); } while (x >= limit);
    return x % bound;
}

inline bool fair_bit(std::mt19937_64& rng) { return rng() >> 63; }

inline double uniform_unit(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

}  // namespace awtc

#endif
