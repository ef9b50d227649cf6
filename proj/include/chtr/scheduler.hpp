/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>

#include "chtr/frame_grid.hpp"
#include "chtr/grant.hpp"
#include "chtr/rng.hpp"

namespace chtr {

enum class SchedulerMode : std::uint8_t {
    /// Constant CQI, constant contiguous allocation every subframe. Required
    /// for gap-free channel measurement.
    kFrozen = 0,
    /// Pseudo-random valid grants; exists to show why freezing is needed.
    kDynamicStub = 1,
};

/// Mutated by a single owner; one grant per subframe.
struct SchedulerState {
    SchedulerMode mode = SchedulerMode::kFrozen;
    int frozen_cqi = 0;
    Grant configured_grant;
    int n_rb_total = 0;
    std::uint64_t next_subframe = 0;
    SplitMix64 rng{0};
};

/// Accepted SNR range for the CQI override, dB.
inline constexpr double kCqiSnrMinDb = -10.0;
inline constexpr double kCqiSnrMaxDb = 40.0;

/// Clamped piecewise-linear SNR -> CQI map: CQI 1 at or below -6 dB, one step
/// per 2 dB, CQI 15 at or above 22 dB. Only the constancy of the result
/// matters to the pipeline; the shape is declared here so it is testable.
/// Throws ConfigError outside [-10, 40] dB.
[[nodiscard]] int override_cqi(double snr_db);

/// Validates the grant template against the grid and freezes the CQI.
[[nodiscard]] SchedulerState make_scheduler(SchedulerMode mode,
                                            int start_rb,
                                            int rb_count,
                                            double snr_db,
                                            const GridConfig& grid,
                                            std::uint64_t seed = 0);

/// Frozen mode: the configured grant with the next subframe index. Dynamic
/// stub: a pseudo-random valid contiguous grant.
[[nodiscard]] Grant next_grant(SchedulerState& state);

}  // namespace chtr
