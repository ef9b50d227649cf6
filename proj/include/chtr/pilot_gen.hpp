/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "chtr/grant.hpp"

namespace chtr {

/// Known transmitted reference signal for one pilot instant: one
/// unit-magnitude QPSK symbol per allocated subcarrier. Both ends regenerate
/// the identical sequence from (seed, slot_counter, grant).
struct PilotSequence {
    std::uint64_t seed = 0;
    std::uint64_t slot_counter = 0;
    std::vector<std::complex<double>> values;
};

/// Deterministic pilot generation. Values are drawn from {(+-1 +-j)/sqrt(2)}
/// keyed by (seed, slot_counter, absolute subcarrier index), so the symbol on
/// a given subcarrier does not depend on the grant width.
/// Throws ConfigError for a zero-width grant.
[[nodiscard]] PilotSequence generate_pilots(std::uint64_t seed,
                                            std::uint64_t slot_counter,
                                            const Grant& grant);

}  // namespace chtr
