#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace preddiff {

// All randomness in the project flows from one base seed. Component streams
// are derived by hashing (base seed, label, salt ints) so that parallel and
// serial runs draw identical values regardless of scheduling.

namespace detail {

inline std::uint64_t fnv1a64_byte(std::uint64_t h, unsigned char b) {
    h ^= b;
    return h * 0x100000001b3ULL;
}

inline std::uint64_t fnv1a64_u64(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h = fnv1a64_byte(h, static_cast<unsigned char>(v >> (8 * i)));
    }
    return h;
}

// splitmix64 finalizer; spreads FNV output over all bits.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view label,
                                 std::span<const std::int64_t> salt = {}) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = detail::fnv1a64_u64(h, base);
    for (char c : label) h = detail::fnv1a64_byte(h, static_cast<unsigned char>(c));
    for (std::int64_t s : salt) h = detail::fnv1a64_u64(h, static_cast<std::uint64_t>(s));
    return detail::mix64(h);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view label,
                                 std::initializer_list<std::int64_t> salt) {
    return derive_seed(base, label, std::span<const std::int64_t>(salt.begin(), salt.size()));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

} // namespace preddiff
