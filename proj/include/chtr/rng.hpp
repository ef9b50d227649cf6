/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <complex>
#include <cstdint>

namespace chtr {

/// SplitMix64 output function. Pure; used both as the stream generator below
/// and as a counter-keyed hash for per-resource-element pilot values.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Small deterministic PRNG stream. Chosen over <random> engines so that a
/// (config, seed) pair produces byte-identical traces on every platform;
/// std::normal_distribution is implementation-defined.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    /// Uniform draw in (0, 1]; never returns 0 so log() is safe.
    double uniform01() noexcept {
        return 1.0 - static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (cosine branch).
    double gaussian() noexcept;

    /// Circularly-symmetric complex Gaussian, CN(0, 1): E[z] = 0, E|z|^2 = 1.
    std::complex<double> complex_gaussian() noexcept;

  private:
    std::uint64_t state_;
};

}  // namespace chtr
