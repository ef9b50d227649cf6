/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <vector>

#include "chtr/grant.hpp"

namespace chtr {

/// LTE FDD uplink bandwidth classes. The underlying value is the wire code
/// used in the trace header.
enum class BandwidthClass : std::uint8_t {
    kMhz1_4 = 0,
    kMhz3 = 1,
    kMhz5 = 2,
    kMhz10 = 3,
    kMhz15 = 4,
    kMhz20 = 5,
};

// Frame timing constants, normal cyclic prefix, FDD.
inline constexpr int kSubcarriersPerRb = 12;
inline constexpr int kSymbolsPerSlot = 7;
inline constexpr int kSlotsPerSubframe = 2;
inline constexpr int kSubframesPerFrame = 10;
inline constexpr int kSymbolsPerSubframe = kSymbolsPerSlot * kSlotsPerSubframe;
/// Uplink reference symbols sit on the fourth symbol of each slot (l = 3 and
/// l = 10 within a subframe).
inline constexpr int kPilotSymbolInSlot = 3;
inline constexpr double kSlotsPerSecond = 2000.0;
inline constexpr double kSlotDurationS = 1.0 / kSlotsPerSecond;

/// Static dimensions and timing of the uplink resource grid.
struct GridConfig {
    BandwidthClass bandwidth_class = BandwidthClass::kMhz5;
    int n_rb_total = 25;
    int subcarriers_per_rb = kSubcarriersPerRb;
    int symbols_per_slot = kSymbolsPerSlot;
    int slots_per_subframe = kSlotsPerSubframe;
    int subframes_per_frame = kSubframesPerFrame;
    double slot_duration_s = kSlotDurationS;
    int pilot_symbol_in_slot = kPilotSymbolInSlot;

    [[nodiscard]] int n_subcarriers_total() const noexcept {
        return n_rb_total * subcarriers_per_rb;
    }
    [[nodiscard]] int symbols_per_frame() const noexcept {
        return subframes_per_frame * slots_per_subframe * symbols_per_slot;
    }
};

/// Resource-element coordinate: subcarrier k, symbol l within a subframe
/// (l in 0..13 under normal cyclic prefix).
struct ReIndex {
    int k = 0;
    int l = 0;

    friend bool operator==(const ReIndex&, const ReIndex&) = default;
};

/// One channel-estimate sample epoch; pilots arrive once per 0.5 ms slot.
struct PilotInstant {
    std::uint64_t slot_counter = 0;
    double wall_time_s = 0.0;
};

/// Fixed bandwidth -> RB-count mapping (6/15/25/50/75/100).
/// Throws ConfigError for values outside the enumeration.
[[nodiscard]] GridConfig grid_dimensions(BandwidthClass bandwidth_class);

/// Parses a bandwidth in MHz (1.4, 3, 5, 10, 15, 20) to its class.
[[nodiscard]] BandwidthClass bandwidth_class_from_mhz(double mhz);
[[nodiscard]] double bandwidth_class_mhz(BandwidthClass bandwidth_class) noexcept;

/// Pilot resource elements of one subframe for the given grant: every
/// allocated subcarrier at l = 3 and l = 10. Ordered first slot then second,
/// ascending subcarrier within each.
[[nodiscard]] std::vector<ReIndex> pilot_res(const GridConfig& grid,
                                             const Grant& grant,
                                             std::uint64_t subframe_index);

/// Wall-clock span of n pilot instants (one per slot).
[[nodiscard]] double instants_to_duration_s(std::uint64_t n_instants) noexcept;

[[nodiscard]] PilotInstant pilot_instant(std::uint64_t slot_counter) noexcept;

}  // namespace chtr
