/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "chtr/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chtr/errors.hpp"

namespace chtr {

int override_cqi(double snr_db) {
    if (!(snr_db >= kCqiSnrMinDb && snr_db <= kCqiSnrMaxDb)) {
        throw ConfigError("snr_db " + std::to_string(snr_db) +
                          " outside the accepted range [-10, 40] dB");
    }
    const auto cqi = static_cast<int>(std::llround(snr_db / 2.0 + 4.0));
    return std::clamp(cqi, 1, 15);
}

SchedulerState make_scheduler(SchedulerMode mode,
                              int start_rb,
                              int rb_count,
                              double snr_db,
                              const GridConfig& grid,
                              std::uint64_t seed) {
    if (rb_count < 1) {
        throw ConfigError("grant template must allocate at least one resource block");
    }
    if (start_rb < 0 || start_rb + rb_count > grid.n_rb_total) {
        throw ConfigError("grant template [" + std::to_string(start_rb) + ", " +
                          std::to_string(start_rb + rb_count) + ") exceeds grid of " +
                          std::to_string(grid.n_rb_total) + " RBs");
    }

    SchedulerState state;
    state.mode = mode;
    state.frozen_cqi = override_cqi(snr_db);
    state.configured_grant = Grant{start_rb, rb_count, 0};
    state.n_rb_total = grid.n_rb_total;
    state.rng = SplitMix64(seed);
    return state;
}

Grant next_grant(SchedulerState& state) {
    Grant grant = state.configured_grant;
    grant.subframe_index = state.next_subframe++;
    if (state.mode == SchedulerMode::kDynamicStub) {
        const auto total = static_cast<std::uint64_t>(state.n_rb_total);
        grant.rb_count = static_cast<int>(state.rng.next() % total) + 1;
        const auto slack = static_cast<std::uint64_t>(state.n_rb_total - grant.rb_count);
        grant.start_rb = static_cast<int>(state.rng.next() % (slack + 1));
    }
    return grant;
}

}  // namespace chtr
