/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include "chtr/errors.hpp"
#include "chtr/pipeline.hpp"
#include "chtr/trace_io.hpp"

using namespace chtr;

TEST_CASE("default measurement run matches the documented geometry") {
    const RunConfig config;  // 3 RB, 240 instants, fD = 10 Hz, 20 dB, seed 1
    const auto output = run_measure(config);

    CHECK(output.trace_bytes.size() == 34600);
    CHECK(output.summary.n_instants == 240);
    CHECK(output.summary.n_subcarriers == 36);
    CHECK(output.summary.span_s == 0.12);
    CHECK(output.summary.throughput_bits_per_s == doctest::Approx(2'304'000.0));
    CHECK(output.summary.trace_bytes == 34600);

    const ChannelTrace trace = read_trace(output.trace_bytes);
    CHECK(trace.header.n_instants == 240);
    CHECK(trace.header.rb_count == 3);
    CHECK(trace.header.seed == 1);
}

TEST_CASE("identical configs produce byte-identical traces") {
    RunConfig config;
    config.n_instants = 100;
    config.seed = 9;
    const auto a = run_measure(config);
    const auto b = run_measure(config);
    CHECK(a.trace_bytes == b.trace_bytes);

    config.seed = 10;
    const auto c = run_measure(config);
    CHECK(a.trace_bytes != c.trace_bytes);
}

TEST_CASE("zero-instant run emits a header-only trace") {
    RunConfig config;
    config.n_instants = 0;
    const auto output = run_measure(config);
    CHECK(output.trace_bytes.size() == 40);
    CHECK(output.summary.span_s == 0.0);
}

TEST_CASE("dynamic scheduling cannot feed a trace") {
    RunConfig config;
    config.scheduler_mode = SchedulerMode::kDynamicStub;
    CHECK_THROWS_AS((void)run_measure(config), ConfigError);
}

TEST_CASE("invalid geometry is rejected before any stage runs") {
    RunConfig config;
    config.rb_count = 26;
    CHECK_THROWS_AS((void)run_measure(config), ConfigError);
    config.rb_count = 3;
    config.snr_db = 99.0;
    CHECK_THROWS_AS((void)run_measure(config), ConfigError);
}

TEST_CASE("config keys round-trip through dump and load") {
    RunConfig config;
    config.bandwidth_class = BandwidthClass::kMhz10;
    config.start_rb = 5;
    config.rb_count = 7;
    config.snr_db = 12.5;
    config.channel_model = ChannelModel::kStatic;
    config.doppler_hz = 33.0;
    config.scale_exponent = 12;
    config.n_instants = 512;
    config.seed = 4242;
    config.feature = Feature::kRealPart;
    config.subcarrier = 17;
    config.order = 6;
    config.horizon = 2;
    config.split = 0.8;

    const auto path = std::filesystem::temp_directory_path() / "chtr_test_config.cfg";
    std::ofstream(path) << dump_run_config(config);
    const RunConfig loaded = load_run_config(path);
    std::filesystem::remove(path);

    CHECK(loaded.bandwidth_class == config.bandwidth_class);
    CHECK(loaded.start_rb == config.start_rb);
    CHECK(loaded.rb_count == config.rb_count);
    CHECK(loaded.snr_db == config.snr_db);
    CHECK(loaded.channel_model == config.channel_model);
    CHECK(loaded.doppler_hz == config.doppler_hz);
    CHECK(loaded.scale_exponent == config.scale_exponent);
    CHECK(loaded.n_instants == config.n_instants);
    CHECK(loaded.seed == config.seed);
    CHECK(loaded.feature == config.feature);
    CHECK(loaded.subcarrier == config.subcarrier);
    CHECK(loaded.order == config.order);
    CHECK(loaded.horizon == config.horizon);
    CHECK(loaded.split == config.split);
}

TEST_CASE("config parser rejects junk") {
    RunConfig config;
    CHECK_THROWS_AS(set_config_key(config, "unknown.key", "1"), ConfigError);
    CHECK_THROWS_AS(set_config_key(config, "scheduler.rb_count", "three"), ConfigError);
    CHECK_THROWS_AS(set_config_key(config, "grid.bandwidth_mhz", "7"), ConfigError);
    CHECK_THROWS_AS(set_config_key(config, "scheduler.mode", "adaptive"), ConfigError);
    CHECK_THROWS_AS((void)load_run_config("/nonexistent/chtr.cfg"), ConfigError);
}

TEST_CASE("comments and spacing are tolerated in config files") {
    const auto path = std::filesystem::temp_directory_path() / "chtr_test_config2.cfg";
    std::ofstream(path) << "# a comment\n\n  seed =  77 \nscheduler.rb_count=5\n";
    const RunConfig loaded = load_run_config(path);
    std::filesystem::remove(path);
    CHECK(loaded.seed == 77);
    CHECK(loaded.rb_count == 5);
}

TEST_CASE("CHTR_SEED overrides the configured seed") {
    RunConfig config;
    config.seed = 1;
    setenv("CHTR_SEED", "555", 1);
    apply_env_overrides(config);
    unsetenv("CHTR_SEED");
    CHECK(config.seed == 555);

    // Without the variable the seed is untouched.
    apply_env_overrides(config);
    CHECK(config.seed == 555);
}

TEST_CASE("noiseless runs freeze the CQI at the top instead of failing") {
    RunConfig config;
    config.snr_db = std::numeric_limits<double>::infinity();
    config.n_instants = 8;
    const auto output = run_measure(config);
    const ChannelTrace trace = read_trace(output.trace_bytes);
    CHECK(std::isinf(trace.header.snr_db));
}

TEST_CASE("measure file writer round-trips") {
    const auto path = std::filesystem::temp_directory_path() / "chtr_test_measure.chtr";
    RunConfig config;
    config.n_instants = 16;
    const MeasureSummary summary = run_measure_to_file(config, path);
    CHECK(summary.trace_bytes == std::filesystem::file_size(path));
    const ChannelTrace trace = read_trace_file(path);
    std::filesystem::remove(path);
    CHECK(trace.header.n_instants == 16);
}

TEST_CASE("summary text carries the measurement facts") {
    RunConfig config;
    config.rb_count = 25;
    config.n_instants = 10;
    const auto output = run_measure(config);
    const std::string text = format_summary(output.summary);
    CHECK(text.find("instants=10") != std::string::npos);
    CHECK(text.find("subcarriers=300") != std::string::npos);
    CHECK(text.find("throughput_bits_per_s=19200000") != std::string::npos);
    CHECK(text.find("saturated_components=") != std::string::npos);
}
