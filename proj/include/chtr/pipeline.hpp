/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "chtr/fading_channel.hpp"
#include "chtr/frame_grid.hpp"
#include "chtr/predictor.hpp"
#include "chtr/scheduler.hpp"

namespace chtr {

/// Full description of a run, measurement and prediction stages included.
/// (config, seed) determines every output byte of the measure stage.
struct RunConfig {
    BandwidthClass bandwidth_class = BandwidthClass::kMhz5;
    SchedulerMode scheduler_mode = SchedulerMode::kFrozen;
    int start_rb = 0;
    int rb_count = 3;
    /// Single SNR: drives both the frozen CQI and the channel noise.
    double snr_db = 20.0;
    ChannelModel channel_model = ChannelModel::kFlatRayleighJakes;
    double doppler_hz = 10.0;
    int scale_exponent = 14;
    std::uint64_t n_instants = 240;
    std::uint64_t seed = 1;
    Feature feature = Feature::kEnvelope;
    int subcarrier = 0;
    int order = 4;
    int horizon = 1;
    double split = 0.7;
};

[[nodiscard]] SchedulerMode scheduler_mode_from_name(std::string_view name);
[[nodiscard]] ChannelModel channel_model_from_name(std::string_view name);
[[nodiscard]] Feature feature_from_name(std::string_view name);

/// Applies one "key = value" assignment using the flat configuration keys
/// (grid.bandwidth_mhz, scheduler.mode, scheduler.start_rb,
/// scheduler.rb_count, scheduler.snr_db, channel.model, channel.doppler_hz,
/// quantizer.scale_exponent, measure.n_instants, predictor.feature,
/// predictor.subcarrier, predictor.order, predictor.horizon,
/// predictor.split, seed).
/// Throws ConfigError for unknown keys or unparsable values.
void set_config_key(RunConfig& config, std::string_view key, std::string_view value);

/// key=value file, '#' comments, blank lines ignored.
[[nodiscard]] RunConfig load_run_config(const std::filesystem::path& path);

/// Serializes a config back to the key=value form accepted by
/// load_run_config.
[[nodiscard]] std::string dump_run_config(const RunConfig& config);

/// CHTR_SEED environment variable overrides the config seed.
void apply_env_overrides(RunConfig& config);

struct MeasureSummary {
    std::uint64_t n_instants = 0;
    int n_subcarriers = 0;
    double span_s = 0.0;
    double throughput_bits_per_s = 0.0;
    std::size_t saturation_count = 0;
    std::size_t trace_bytes = 0;
};

struct MeasureOutput {
    std::vector<std::uint8_t> trace_bytes;
    MeasureSummary summary;
};

/// Runs the frozen-grant simulation for n_instants slots and serializes the
/// quantized estimates. Rejects dynamic_stub scheduling: a trace needs a
/// constant per-instant geometry.
[[nodiscard]] MeasureOutput run_measure(const RunConfig& config);

MeasureSummary run_measure_to_file(const RunConfig& config,
                                   const std::filesystem::path& out_path);

[[nodiscard]] std::string format_summary(const MeasureSummary& summary);

}  // namespace chtr
