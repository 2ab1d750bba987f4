// SPDX-License-Identifier: Apache-2.0
/**
 * @file
 * Seed derivation and portable bounded draws.
 *
 * std::mt19937_64 output is fully specified by the standard, but the
 * distribution adaptors are not, so integer draws that feed reproducible
 * gate streams go through uniform_below() instead.
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace mcq {

using Engine = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Order-sensitive combination of a base seed with any number of keys.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = mix64(base);
    for (std::uint64_t k : keys) {
        h = mix64(h ^ mix64(k));
    }
    return h;
}

/// Uniform integer in [0, bound) by rejection; bound must be nonzero.
inline std::uint64_t uniform_below(Engine &engine, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = 0;
    do {
        draw = engine();
    } while (draw >= limit);
    return draw % bound;
}

} // namespace mcq
