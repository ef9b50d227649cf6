/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "chtr/rng.hpp"

#include <cmath>
#include <numbers>

namespace chtr {

double SplitMix64::gaussian() noexcept {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> SplitMix64::complex_gaussian() noexcept {
    const double u1 = uniform01();
    const double u2 = uniform01();
    // Radius sqrt(-ln u) gives E|z|^2 = 1, components N(0, 1/2) each.
    const double r = std::sqrt(-std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
}

}  // namespace chtr
