/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "chtr/frame_grid.hpp"

#include <cmath>
#include <string>

#include "chtr/errors.hpp"

namespace chtr {

namespace {

int rb_count_for(BandwidthClass bandwidth_class) {
    switch (bandwidth_class) {
        case BandwidthClass::kMhz1_4:
            return 6;
        case BandwidthClass::kMhz3:
            return 15;
        case BandwidthClass::kMhz5:
            return 25;
        case BandwidthClass::kMhz10:
            return 50;
        case BandwidthClass::kMhz15:
            return 75;
        case BandwidthClass::kMhz20:
            return 100;
    }
    throw ConfigError("unknown bandwidth class code " +
                      std::to_string(static_cast<int>(bandwidth_class)));
}

}  // namespace

GridConfig grid_dimensions(BandwidthClass bandwidth_class) {
    GridConfig grid;
    grid.bandwidth_class = bandwidth_class;
    grid.n_rb_total = rb_count_for(bandwidth_class);
    return grid;
}

BandwidthClass bandwidth_class_from_mhz(double mhz) {
    constexpr double kTol = 1e-9;
    if (std::abs(mhz - 1.4) < kTol) return BandwidthClass::kMhz1_4;
    if (std::abs(mhz - 3.0) < kTol) return BandwidthClass::kMhz3;
    if (std::abs(mhz - 5.0) < kTol) return BandwidthClass::kMhz5;
    if (std::abs(mhz - 10.0) < kTol) return BandwidthClass::kMhz10;
    if (std::abs(mhz - 15.0) < kTol) return BandwidthClass::kMhz15;
    if (std::abs(mhz - 20.0) < kTol) return BandwidthClass::kMhz20;
    throw ConfigError("unsupported bandwidth " + std::to_string(mhz) +
                      " MHz; valid: 1.4, 3, 5, 10, 15, 20");
}

double bandwidth_class_mhz(BandwidthClass bandwidth_class) noexcept {
    switch (bandwidth_class) {
        case BandwidthClass::kMhz1_4:
            return 1.4;
        case BandwidthClass::kMhz3:
            return 3.0;
        case BandwidthClass::kMhz5:
            return 5.0;
        case BandwidthClass::kMhz10:
            return 10.0;
        case BandwidthClass::kMhz15:
            return 15.0;
        case BandwidthClass::kMhz20:
            return 20.0;
    }
    return 0.0;
}

std::vector<ReIndex> pilot_res(const GridConfig& grid,
                               const Grant& grant,
                               std::uint64_t subframe_index) {
    (void)subframe_index;  // pilots sit at the same coordinates in every subframe
    if (grant.rb_count < 1) {
        throw ConfigError("grant must allocate at least one resource block");
    }
    if (grant.start_rb < 0 || grant.start_rb + grant.rb_count > grid.n_rb_total) {
        throw ConfigError("grant [" + std::to_string(grant.start_rb) + ", " +
                          std::to_string(grant.start_rb + grant.rb_count) +
                          ") exceeds grid of " + std::to_string(grid.n_rb_total) + " RBs");
    }

    const int first_k = grant.start_rb * grid.subcarriers_per_rb;
    const int n_k = grant.rb_count * grid.subcarriers_per_rb;
    std::vector<ReIndex> res;
    res.reserve(static_cast<std::size_t>(2 * n_k));
    for (int slot = 0; slot < grid.slots_per_subframe; ++slot) {
        const int l = slot * grid.symbols_per_slot + grid.pilot_symbol_in_slot;
        for (int k = first_k; k < first_k + n_k; ++k) {
            res.push_back(ReIndex{k, l});
        }
    }
    return res;
}

double instants_to_duration_s(std::uint64_t n_instants) noexcept {
    // Division by the exact slot rate keeps round counts exact (240 -> 0.12).
    return static_cast<double>(n_instants) / kSlotsPerSecond;
}

PilotInstant pilot_instant(std::uint64_t slot_counter) noexcept {
    return PilotInstant{slot_counter, instants_to_duration_s(slot_counter)};
}

}  // namespace chtr
