/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "chtr/pilot_gen.hpp"

#include <numbers>

#include "chtr/errors.hpp"
#include "chtr/rng.hpp"

namespace chtr {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// The four QPSK constellation points (+-1 +-j)/sqrt(2).
constexpr std::complex<double> kQpsk[4] = {
    {kInvSqrt2, kInvSqrt2},
    {kInvSqrt2, -kInvSqrt2},
    {-kInvSqrt2, kInvSqrt2},
    {-kInvSqrt2, -kInvSqrt2},
};

constexpr std::uint64_t kSlotStreamTag = 0x70696C6F747321ULL;

}  // namespace

PilotSequence generate_pilots(std::uint64_t seed,
                              std::uint64_t slot_counter,
                              const Grant& grant) {
    if (grant.rb_count < 1) {
        throw ConfigError("grant must allocate at least one resource block");
    }

    PilotSequence seq;
    seq.seed = seed;
    seq.slot_counter = slot_counter;
    seq.values.reserve(static_cast<std::size_t>(grant.n_subcarriers()));

    const std::uint64_t stream = splitmix64(seed ^ splitmix64(slot_counter + kSlotStreamTag));
    for (int i = 0; i < grant.n_subcarriers(); ++i) {
        const auto k_abs = static_cast<std::uint64_t>(grant.first_subcarrier() + i);
        const std::uint64_t word = splitmix64(stream ^ splitmix64(k_abs));
        seq.values.push_back(kQpsk[word >> 62]);
    }
    return seq;
}

}  // namespace chtr
