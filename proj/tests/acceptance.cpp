/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

// Acceptance suite: one self-contained check per release criterion, each with
// its pinned tolerance and runtime budget. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "chtr/errors.hpp"
#include "chtr/estimator.hpp"
#include "chtr/fading_channel.hpp"
#include "chtr/frame_grid.hpp"
#include "chtr/pilot_gen.hpp"
#include "chtr/pipeline.hpp"
#include "chtr/predictor.hpp"
#include "chtr/rng.hpp"
#include "chtr/scheduler.hpp"
#include "chtr/trace_io.hpp"
#include "oracles.hpp"

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw Failure(message);
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// 1. Frame arithmetic: 5 MHz => 25 RBs / 300 subcarriers, 3 RBs => 36
//    subcarriers, 240 instants => exactly 0.12 s.
void frame_arithmetic() {
    const auto grid = chtr::grid_dimensions(chtr::BandwidthClass::kMhz5);
    require(grid.n_rb_total == 25, "5 MHz must map to 25 RBs");
    require(grid.n_subcarriers_total() == 300, "25 RBs must span 300 subcarriers");

    const auto res = chtr::pilot_res(grid, chtr::Grant{0, 3, 0}, 0);
    std::set<int> subcarriers;
    for (const auto& re : res) {
        subcarriers.insert(re.k);
    }
    require(subcarriers.size() == 36, "3 RBs must span 36 subcarriers");
    require(res.size() == 72, "3 RBs must give 72 pilot REs per subframe");

    require(chtr::instants_to_duration_s(240) == 0.12,
            "240 pilot instants must span exactly 0.12 s");
}

// 2. Throughput identity at 25 RB / 0.5 ms.
void throughput_identity() {
    require(chtr::throughput_bits_per_s(25, 5e-4) == 19'200'000.0,
            "25 RB at 0.5 ms must be exactly 19.2 Mbit/s");
}

// 3. Noiseless estimator exactness over 1e4 random (h, pilot) pairs.
void estimator_exactness() {
    chtr::SplitMix64 rng(101);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto pilots = chtr::generate_pilots(202, static_cast<std::uint64_t>(i),
                                                  chtr::Grant{0, 1, 0});
        const std::complex<double> h = 2.0 * rng.complex_gaussian();
        std::vector<std::complex<double>> received;
        received.reserve(pilots.values.size());
        for (const auto& x : pilots.values) {
            received.push_back(h * x);
        }
        const auto block = chtr::ls_estimate(received, pilots);
        for (const auto& estimate : block.estimates) {
            worst = std::max(worst, std::abs(estimate.real() - h.real()));
            worst = std::max(worst, std::abs(estimate.imag() - h.imag()));
        }
    }
    require(worst < 1e-12, "noiseless estimate error " + fmt(worst) + " exceeds 1e-12");
}

// 4. Estimator error variance at 20 dB over 1e5 REs within 5% of 0.01.
void estimator_error_variance() {
    const auto pilots = chtr::generate_pilots(303, 0, chtr::Grant{0, 25, 0});
    chtr::SplitMix64 rng(404);
    const std::complex<double> h{1.0, 0.0};

    double acc = 0.0;
    std::size_t count = 0;
    while (count < 100000) {
        const auto received = chtr::apply_channel(pilots, h, 20.0, rng);
        const auto block = chtr::ls_estimate(received, pilots);
        for (const auto& estimate : block.estimates) {
            acc += std::norm(estimate - h);
        }
        count += block.estimates.size();
    }
    const double measured = acc / static_cast<double>(count);
    require(std::abs(measured - 0.01) <= 0.05 * 0.01,
            "estimation error variance " + fmt(measured) + " outside 0.01 +- 5%");
}

// 5. Fixed-point lane layout: golden vector + 1e4 fuzzed round-trips.
void fixed_point_layout() {
    const std::vector<chtr::Iq16> golden = {{1, 2}, {3, 4}, {5, 6}, {7, 8}};
    const std::vector<std::uint8_t> expected = {
        0x01, 0x00, 0x02, 0x00, 0x03, 0x00, 0x04, 0x00,
        0x05, 0x00, 0x06, 0x00, 0x07, 0x00, 0x08, 0x00,
    };
    require(chtr::pack_lanes(golden) == expected, "golden 4-RE group layout mismatch");

    chtr::SplitMix64 rng(505);
    for (int round = 0; round < 10000; ++round) {
        const std::size_t n = rng.next() % 64;
        std::vector<chtr::Iq16> samples;
        samples.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            samples.push_back(chtr::Iq16{static_cast<std::int16_t>(rng.next()),
                                         static_cast<std::int16_t>(rng.next())});
        }
        const auto bytes = chtr::pack_lanes(samples);
        require(bytes.size() == 16 * ((n + 3) / 4), "packed size formula violated");
        require(chtr::unpack_lanes(bytes, n) == samples, "lane round-trip mismatch");
    }
}

// 6. Trace container round-trip identity plus truncation/bad-magic fuzzing.
void trace_container() {
    chtr::SplitMix64 rng(606);
    chtr::TraceHeader header;
    header.rb_count = 3;
    header.n_instants = 64;
    header.scale_exponent = 14;
    std::vector<chtr::Iq16> samples;
    for (std::size_t i = 0; i < 64 * 36; ++i) {
        samples.push_back(chtr::Iq16{static_cast<std::int16_t>(rng.next()),
                                     static_cast<std::int16_t>(rng.next())});
    }

    const auto bytes = chtr::write_trace(header, samples);
    const auto trace = chtr::read_trace(bytes);
    require(chtr::write_trace(trace.header, trace.samples) == bytes,
            "write-read-write is not byte-identical");

    // Truncations at every length below the full trace.
    for (std::size_t cut = 0; cut < bytes.size(); cut += 13) {
        const std::vector<std::uint8_t> prefix(bytes.begin(),
                                               bytes.begin() + static_cast<long>(cut));
        bool format_error = false;
        try {
            (void)chtr::read_trace(prefix);
        } catch (const chtr::FormatError&) {
            format_error = true;
        }
        require(format_error, "truncated trace did not raise a format error");
    }

    // Magic and header corruption.
    for (int round = 0; round < 2000; ++round) {
        auto corrupted = bytes;
        corrupted[rng.next() % chtr::kTraceHeaderBytes] = static_cast<std::uint8_t>(rng.next());
        try {
            (void)chtr::read_trace(corrupted);
        } catch (const chtr::FormatError&) {
        }
    }
    auto corrupted = bytes;
    corrupted[0] = 'X';
    bool bad_magic = false;
    try {
        (void)chtr::read_trace(corrupted);
    } catch (const chtr::FormatError&) {
        bad_magic = true;
    }
    require(bad_magic, "bad magic did not raise a format error");
}

// 7. Jakes statistics over 1e5 instants at fD = 100 Hz against the
//    independent quadrature Bessel oracle.
void channel_statistics() {
    chtr::ChannelModelConfig config;
    config.doppler_hz = 100.0;
    config.seed = 1;
    const auto realization = chtr::generate_channel(config, 100000);

    const double variance = chtr::oracle::empirical_variance(realization.h_series);
    require(std::abs(variance - 1.0) <= 0.02,
            "empirical variance " + fmt(variance) + " outside 1 +- 2%");

    for (std::size_t lag = 1; lag <= 10; ++lag) {
        const auto measured = chtr::oracle::empirical_autocorr(realization.h_series, lag);
        const double expected = chtr::oracle::bessel_j0(
            2.0 * std::numbers::pi * 100.0 * 5e-4 * static_cast<double>(lag));
        const double deviation = std::abs(measured - expected);
        require(deviation <= 0.05, "autocorrelation at lag " + std::to_string(lag) +
                                       " deviates by " + fmt(deviation));
    }
}

// 8. Scheduler constancy and gap-free pilot coverage.
void scheduler_constancy() {
    const auto grid = chtr::grid_dimensions(chtr::BandwidthClass::kMhz5);
    auto state = chtr::make_scheduler(chtr::SchedulerMode::kFrozen, 0, 3, 20.0, grid);

    chtr::Grant first = chtr::next_grant(state);
    for (int i = 1; i < 10000; ++i) {
        const auto grant = chtr::next_grant(state);
        require(grant.start_rb == first.start_rb && grant.rb_count == first.rb_count,
                "frozen grant changed at subframe " + std::to_string(i));
    }

    auto coverage_state = chtr::make_scheduler(chtr::SchedulerMode::kFrozen, 0, 3, 20.0, grid);
    std::set<int> reference;
    for (int subframe = 0; subframe < 120; ++subframe) {  // 240 pilot instants
        const auto grant = chtr::next_grant(coverage_state);
        const auto res = chtr::pilot_res(grid, grant, grant.subframe_index);
        std::set<int> slot0;
        std::set<int> slot1;
        for (const auto& re : res) {
            (re.l == 3 ? slot0 : slot1).insert(re.k);
        }
        if (reference.empty()) {
            reference = slot0;
        }
        require(slot0.size() == 36 && slot0 == slot1 && slot0 == reference,
                "pilot coverage gap at subframe " + std::to_string(subframe));
    }
}

// 9. Measured prediction MSE within [1x, 2x] of the direct-solve Wiener
//    oracle on the standard evaluation trace.
void prediction_vs_oracle() {
    chtr::RunConfig config;
    config.doppler_hz = 10.0;
    config.snr_db = 20.0;
    config.n_instants = 2000;
    config.seed = 11;

    const auto output = chtr::run_measure(config);
    const auto trace = chtr::read_trace(output.trace_bytes);
    const auto evaluation = chtr::evaluate(trace, chtr::Feature::kRealPart, 0, 4, 1, 0.7);

    const double oracle = chtr::wiener_oracle(10.0, 5e-4, 4, 20.0);
    const double measured = evaluation.report.mse;
    require(measured >= oracle, "measured sigma2 " + fmt(measured) +
                                    " below the Wiener bound " + fmt(oracle));
    require(measured <= 2.0 * oracle, "measured sigma2 " + fmt(measured) + " above 2x oracle " +
                                          fmt(2.0 * oracle));
}

// 10. Normalization contract and affine invariance of the evaluation MSE.
void normalization() {
    chtr::SplitMix64 rng(707);
    std::vector<double> series;
    for (int i = 0; i < 4000; ++i) {
        series.push_back(5.0 + 2.0 * rng.gaussian());
    }
    const auto normalized = chtr::zscore(series);
    double mean = 0.0;
    for (double v : normalized.values) {
        mean += v;
    }
    mean /= static_cast<double>(normalized.values.size());
    double var = 0.0;
    for (double v : normalized.values) {
        var += (v - mean) * (v - mean);
    }
    var /= static_cast<double>(normalized.values.size());
    require(std::abs(mean) < 1e-12, "z-score mean " + fmt(mean) + " not 0 within 1e-12");
    require(std::abs(std::sqrt(var) - 1.0) < 1e-12,
            "z-score std deviates from 1 by more than 1e-12");

    // Affine invariance of the evaluation MSE.
    chtr::ChannelModelConfig channel;
    channel.doppler_hz = 10.0;
    channel.seed = 3;
    const auto realization = chtr::generate_channel(channel, 2000);
    chtr::SplitMix64 noise(808);
    std::vector<double> raw;
    raw.reserve(2000);
    for (const auto& h : realization.h_series) {
        raw.push_back((h + 0.1 * noise.complex_gaussian()).real());
    }
    std::vector<double> transformed;
    transformed.reserve(raw.size());
    for (double v : raw) {
        transformed.push_back(5.0 * v + 3.0);
    }

    chtr::ArPredictor a(4);
    chtr::ArPredictor b(4);
    const double base = chtr::evaluate_series(raw, a, 1, 0.7).report.mse;
    const double scaled = chtr::evaluate_series(transformed, b, 1, 0.7).report.mse;
    require(std::abs(base - scaled) < 1e-9,
            "sigma2 changed by " + fmt(std::abs(base - scaled)) + " under an affine transform");
}

// 11. End-to-end determinism of the measure stage.
void determinism() {
    chtr::RunConfig config;
    config.n_instants = 512;
    config.seed = 77;
    const auto a = chtr::run_measure(config);
    const auto b = chtr::run_measure(config);
    require(a.trace_bytes == b.trace_bytes, "identical configs gave different traces");
}

// 12. Throughput capability: 1 s of slots at 25 RB processed in at most 1 s,
//     i.e. the measure stage sustains the 19.2 Mbit/s estimate rate.
void throughput_capability() {
    chtr::RunConfig config;
    config.rb_count = 25;
    config.n_instants = 2000;  // one second of slots
    config.seed = 11;

    const auto start = std::chrono::steady_clock::now();
    const auto output = chtr::run_measure(config);
    const auto elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    require(output.trace_bytes.size() == 40 + 2000ULL * 1200,
            "unexpected trace size for 25 RB x 2000 instants");
    const double bits = 2000.0 * 300.0 * 32.0;
    const double rate = bits / elapsed;
    require(elapsed <= 1.0, "processed 1 s of slots in " + fmt(elapsed) + " s (rate " +
                                fmt(rate) + " bit/s, need >= 1.92e7)");
}

struct Criterion {
    int number;
    const char* description;
    double budget_s;
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "frame arithmetic (25 RB / 300 sc at 5 MHz, 36 sc at 3 RB, 240 -> 0.12 s)", 1.0,
         frame_arithmetic},
        {2, "throughput identity 19.2 Mbit/s at 25 RB", 1.0, throughput_identity},
        {3, "noiseless estimator exactness < 1e-12 over 1e4 pairs", 1.0, estimator_exactness},
        {4, "estimator error variance 0.01 +- 5% at 20 dB over 1e5 REs", 10.0,
         estimator_error_variance},
        {5, "fixed-point lane layout golden vector + 1e4 fuzzed round-trips", 5.0,
         fixed_point_layout},
        {6, "trace container round-trip and malformed-input handling", 10.0, trace_container},
        {7, "Jakes statistics vs Bessel oracle over 1e5 instants", 30.0, channel_statistics},
        {8, "frozen scheduler constancy and gap-free coverage", 1.0, scheduler_constancy},
        {9, "prediction sigma2 within [1x, 2x] of the Wiener oracle", 30.0,
         prediction_vs_oracle},
        {10, "z-score contract and affine invariance of sigma2", 30.0, normalization},
        {11, "byte-identical traces for identical configs", 10.0, determinism},
        {12, "measure stage sustains 19.2 Mbit/s (1 s of slots in <= 1 s)", 10.0,
         throughput_capability},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string message;
        bool passed = true;
        try {
            criterion.run();
        } catch (const std::exception& error) {
            passed = false;
            message = error.what();
        }
        const auto elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (passed && elapsed > criterion.budget_s) {
            passed = false;
            message = "exceeded the " + fmt(criterion.budget_s) + " s budget";
        }

        std::printf("%s  criterion %2d: %s (%.2f s)%s%s\n", passed ? "PASS" : "FAIL",
                    criterion.number, criterion.description, elapsed,
                    message.empty() ? "" : " -- ", message.c_str());
        failures += passed ? 0 : 1;
    }

    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
