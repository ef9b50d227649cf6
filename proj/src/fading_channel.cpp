/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "chtr/fading_channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "chtr/errors.hpp"

namespace chtr {

namespace {

ChannelRealization jakes_realization(double doppler_hz,
                                     std::uint64_t seed,
                                     std::size_t n_instants) {
    constexpr int n_sin = kJakesSinusoids;
    SplitMix64 rng(seed);

    // Equally spaced arrival angles with one random rotation keep the
    // per-realization time-averaged autocorrelation on J0; i.i.d. phases make
    // the marginal circularly symmetric.
    const double rotation = 2.0 * std::numbers::pi * rng.uniform01();
    double omega[n_sin];
    double phase[n_sin];
    for (int n = 0; n < n_sin; ++n) {
        const double alpha = (2.0 * std::numbers::pi * n + rotation) / n_sin;
        omega[n] = 2.0 * std::numbers::pi * doppler_hz * std::cos(alpha);
        phase[n] = 2.0 * std::numbers::pi * rng.uniform01();
    }

    ChannelRealization realization;
    realization.h_series.reserve(n_instants);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(n_sin));
    for (std::size_t i = 0; i < n_instants; ++i) {
        const double t = static_cast<double>(i) * realization.sample_interval_s;
        double re = 0.0;
        double im = 0.0;
        for (int n = 0; n < n_sin; ++n) {
            const double arg = omega[n] * t + phase[n];
            re += std::cos(arg);
            im += std::sin(arg);
        }
        realization.h_series.emplace_back(amplitude * re, amplitude * im);
    }
    return realization;
}

}  // namespace

ChannelRealization generate_channel(const ChannelModelConfig& config, std::size_t n_instants) {
    if (n_instants < 1) {
        throw ConfigError("a channel realization needs at least one instant");
    }
    if (config.doppler_hz < 0.0 || !std::isfinite(config.doppler_hz)) {
        throw ConfigError("doppler_hz must be finite and non-negative");
    }

    switch (config.model) {
        case ChannelModel::kFlatRayleighJakes:
            return jakes_realization(config.doppler_hz, config.seed, n_instants);
        case ChannelModel::kStatic: {
            SplitMix64 rng(config.seed);
            ChannelRealization realization;
            realization.h_series.assign(n_instants, rng.complex_gaussian());
            return realization;
        }
    }
    throw ConfigError("unknown channel model code " +
                      std::to_string(static_cast<int>(config.model)));
}

std::vector<std::complex<double>> apply_channel(const PilotSequence& pilots,
                                                std::complex<double> h,
                                                double snr_db,
                                                SplitMix64& noise_rng) {
    std::vector<std::complex<double>> received;
    received.reserve(pilots.values.size());

    const double sigma2 = noise_variance(snr_db);
    if (sigma2 == 0.0) {
        for (const auto& x : pilots.values) {
            received.push_back(h * x);
        }
        return received;
    }

    const double sigma = std::sqrt(sigma2);
    for (const auto& x : pilots.values) {
        received.push_back(h * x + sigma * noise_rng.complex_gaussian());
    }
    return received;
}

double theoretical_autocorr(double doppler_hz, double lag_s) {
    return std::cyl_bessel_j(0.0, 2.0 * std::numbers::pi * doppler_hz * lag_s);
}

double noise_variance(double snr_db) noexcept {
    if (snr_db == std::numeric_limits<double>::infinity()) {
        return 0.0;
    }
    return std::pow(10.0, -snr_db / 10.0);
}

}  // namespace chtr
