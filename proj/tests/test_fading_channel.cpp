/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "chtr/errors.hpp"
#include "chtr/fading_channel.hpp"
#include "chtr/pilot_gen.hpp"
#include "oracles.hpp"

using namespace chtr;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("jakes realization is zero-mean with unit variance") {
    ChannelModelConfig config;
    config.doppler_hz = 100.0;
    config.seed = 1;
    const auto realization = generate_channel(config, 100000);
    REQUIRE(realization.h_series.size() == 100000);

    CHECK(std::abs(oracle::empirical_mean(realization.h_series)) < 0.02);
    CHECK(oracle::empirical_variance(realization.h_series) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("jakes autocorrelation tracks the Bessel oracle") {
    ChannelModelConfig config;
    config.doppler_hz = 100.0;
    config.seed = 2;
    const auto realization = generate_channel(config, 100000);

    for (std::size_t lag = 1; lag <= 10; ++lag) {
        const auto measured = oracle::empirical_autocorr(realization.h_series, lag);
        const double expected =
            oracle::bessel_j0(2.0 * std::numbers::pi * 100.0 * 5e-4 * static_cast<double>(lag));
        CHECK(std::abs(measured - expected) < 0.05);
    }
}

TEST_CASE("autocorrelation vanishes at the first Bessel zero") {
    // Doppler chosen so lag 8 lands on J0's first zero, 2 pi fD tau = 2.40483.
    const double doppler = 2.40483 / (2.0 * std::numbers::pi * 8.0 * 5e-4);
    ChannelModelConfig config;
    config.doppler_hz = doppler;
    config.seed = 3;
    const auto realization = generate_channel(config, 100000);
    const auto measured = oracle::empirical_autocorr(realization.h_series, 8);
    CHECK(std::abs(measured) < 0.05);
}

TEST_CASE("same seed reproduces the same realization") {
    ChannelModelConfig config;
    config.doppler_hz = 42.0;
    config.seed = 99;
    const auto a = generate_channel(config, 500);
    const auto b = generate_channel(config, 500);
    for (std::size_t i = 0; i < a.h_series.size(); ++i) {
        CHECK(a.h_series[i] == b.h_series[i]);
    }
}

TEST_CASE("static model repeats one seed-determined coefficient") {
    ChannelModelConfig config;
    config.model = ChannelModel::kStatic;
    config.seed = 7;
    const auto realization = generate_channel(config, 100);
    for (const auto& h : realization.h_series) {
        CHECK(h == realization.h_series.front());
    }
    config.seed = 8;
    CHECK(generate_channel(config, 1).h_series.front() != realization.h_series.front());
}

TEST_CASE("invalid channel configuration is rejected") {
    ChannelModelConfig config;
    config.doppler_hz = -1.0;
    CHECK_THROWS_AS((void)generate_channel(config, 10), ConfigError);
    config.doppler_hz = 10.0;
    CHECK_THROWS_AS((void)generate_channel(config, 0), ConfigError);
}

TEST_CASE("noiseless channel application is the exact product") {
    const auto pilots = generate_pilots(1, 0, Grant{0, 3, 0});
    SplitMix64 rng(0);

    SUBCASE("identity channel returns the pilots") {
        const auto received = apply_channel(pilots, {1.0, 0.0}, kInf, rng);
        for (std::size_t i = 0; i < received.size(); ++i) {
            CHECK(received[i] == pilots.values[i]);
        }
    }

    SUBCASE("h = 0.5 - 0.5j scales every pilot exactly") {
        const std::complex<double> h{0.5, -0.5};
        const auto received = apply_channel(pilots, h, kInf, rng);
        for (std::size_t i = 0; i < received.size(); ++i) {
            CHECK(received[i] == h * pilots.values[i]);
        }
    }
}

TEST_CASE("noise power matches the SNR formula") {
    // E|y - h x|^2 = sigma_n^2 = 10^(-snr/10); Monte-Carlo at 20 dB.
    const auto pilots = generate_pilots(1, 0, Grant{0, 25, 0});
    SplitMix64 rng(12345);
    const std::complex<double> h{1.0, 0.0};

    double acc = 0.0;
    std::size_t count = 0;
    while (count < 100000) {
        const auto received = apply_channel(pilots, h, 20.0, rng);
        for (std::size_t i = 0; i < received.size(); ++i) {
            acc += std::norm(received[i] - h * pilots.values[i]);
        }
        count += received.size();
    }
    CHECK(acc / static_cast<double>(count) == doctest::Approx(0.01).epsilon(0.05));
}

TEST_CASE("theoretical autocorrelation is Bessel J0") {
    CHECK(theoretical_autocorr(100.0, 0.0) == 1.0);
    CHECK(theoretical_autocorr(0.0, 12.3) == 1.0);

    // First zero of J0.
    const double doppler = 2.40483 / (2.0 * std::numbers::pi);
    CHECK(std::abs(theoretical_autocorr(doppler, 1.0)) < 1e-4);

    // Against the quadrature oracle over a grid.
    for (int i = 0; i <= 20; ++i) {
        const double lag = 1e-3 * i;
        CHECK(theoretical_autocorr(250.0, lag) ==
              doctest::Approx(oracle::bessel_j0(2.0 * std::numbers::pi * 250.0 * lag))
                  .epsilon(1e-9));
    }
}

TEST_CASE("noise variance handles the noiseless limit") {
    CHECK(noise_variance(kInf) == 0.0);
    CHECK(noise_variance(20.0) == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(noise_variance(0.0) == doctest::Approx(1.0).epsilon(1e-12));
}
