/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>

namespace chtr {

/// Contiguous uplink resource-block allocation, valid for one subframe.
struct Grant {
    int start_rb = 0;
    int rb_count = 1;
    std::uint64_t subframe_index = 0;

    [[nodiscard]] int first_subcarrier() const noexcept { return start_rb * 12; }
    [[nodiscard]] int n_subcarriers() const noexcept { return rb_count * 12; }
};

}  // namespace chtr
