/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "chtr/frame_grid.hpp"
#include "chtr/pilot_gen.hpp"
#include "chtr/rng.hpp"

namespace chtr {

enum class ChannelModel : std::uint8_t {
    kFlatRayleighJakes = 0,
    kStatic = 1,
};

struct ChannelModelConfig {
    ChannelModel model = ChannelModel::kFlatRayleighJakes;
    double doppler_hz = 10.0;
    double snr_db = 20.0;
    std::uint64_t seed = 1;
};

/// True channel coefficients, one per pilot instant. Flat fading: the same h
/// applies to every subcarrier of an instant.
struct ChannelRealization {
    std::vector<std::complex<double>> h_series;
    double sample_interval_s = kSlotDurationS;
};

/// Number of sinusoids in the sum-of-sinusoids Doppler synthesis.
inline constexpr int kJakesSinusoids = 64;

/// Generates h ~ CN(0,1) with Jakes autocorrelation J0(2*pi*fD*tau), sampled
/// once per slot. Equal-power sinusoids at equally spaced arrival angles with
/// a random rotation and i.i.d. random phases. The static model draws one
/// CN(0,1) coefficient from the seed and repeats it.
/// Throws ConfigError for negative Doppler or n_instants == 0.
[[nodiscard]] ChannelRealization generate_channel(const ChannelModelConfig& config,
                                                  std::size_t n_instants);

/// y_i = h * x_i + n_i with n_i ~ CN(0, sigma_n^2) relative to unit pilot
/// power. snr_db may be +infinity (noiseless, exact product).
[[nodiscard]] std::vector<std::complex<double>> apply_channel(const PilotSequence& pilots,
                                                              std::complex<double> h,
                                                              double snr_db,
                                                              SplitMix64& noise_rng);

/// Jakes-model autocorrelation J0(2*pi*doppler_hz*lag_s).
[[nodiscard]] double theoretical_autocorr(double doppler_hz, double lag_s);

/// Per-RE noise variance 10^(-snr_db/10); 0 for snr_db = +infinity.
[[nodiscard]] double noise_variance(double snr_db) noexcept;

}  // namespace chtr
