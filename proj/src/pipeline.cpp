/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "chtr/pipeline.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "chtr/errors.hpp"
#include "chtr/estimator.hpp"
#include "chtr/pilot_gen.hpp"
#include "chtr/trace_io.hpp"

namespace chtr {

namespace {

// Distinct sub-streams derived from the run seed.
constexpr std::uint64_t kChannelStreamTag = 0x6368616E6E656CULL;
constexpr std::uint64_t kNoiseStreamTag = 0x6E6F69736521ULL;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view key, std::string_view value) {
    if (value == "inf" || value == "+inf" || value == "infinity") {
        return std::numeric_limits<double>::infinity();
    }
    double out = 0.0;
    const auto* end = value.data() + value.size();
    const auto result = std::from_chars(value.data(), end, out);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ConfigError("cannot parse '" + std::string(value) + "' as a number for " +
                          std::string(key));
    }
    return out;
}

std::int64_t parse_int(std::string_view key, std::string_view value) {
    std::int64_t out = 0;
    const auto* end = value.data() + value.size();
    const auto result = std::from_chars(value.data(), end, out);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ConfigError("cannot parse '" + std::string(value) + "' as an integer for " +
                          std::string(key));
    }
    return out;
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    const auto* end = value.data() + value.size();
    const auto result = std::from_chars(value.data(), end, out);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ConfigError("cannot parse '" + std::string(value) +
                          "' as an unsigned integer for " + std::string(key));
    }
    return out;
}

}  // namespace

SchedulerMode scheduler_mode_from_name(std::string_view name) {
    if (name == "frozen") {
        return SchedulerMode::kFrozen;
    }
    if (name == "dynamic_stub") {
        return SchedulerMode::kDynamicStub;
    }
    throw ConfigError("unknown scheduler mode '" + std::string(name) +
                      "' (valid: frozen, dynamic_stub)");
}

ChannelModel channel_model_from_name(std::string_view name) {
    if (name == "flat_rayleigh_jakes") {
        return ChannelModel::kFlatRayleighJakes;
    }
    if (name == "static") {
        return ChannelModel::kStatic;
    }
    throw ConfigError("unknown channel model '" + std::string(name) +
                      "' (valid: flat_rayleigh_jakes, static)");
}

Feature feature_from_name(std::string_view name) {
    if (name == "envelope") {
        return Feature::kEnvelope;
    }
    if (name == "real_part") {
        return Feature::kRealPart;
    }
    throw ConfigError("unknown feature '" + std::string(name) +
                      "' (valid: envelope, real_part)");
}

void set_config_key(RunConfig& config, std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "grid.bandwidth_mhz") {
        config.bandwidth_class = bandwidth_class_from_mhz(parse_double(key, value));
    } else if (key == "scheduler.mode") {
        config.scheduler_mode = scheduler_mode_from_name(value);
    } else if (key == "scheduler.start_rb") {
        config.start_rb = static_cast<int>(parse_int(key, value));
    } else if (key == "scheduler.rb_count") {
        config.rb_count = static_cast<int>(parse_int(key, value));
    } else if (key == "scheduler.snr_db") {
        config.snr_db = parse_double(key, value);
    } else if (key == "channel.model") {
        config.channel_model = channel_model_from_name(value);
    } else if (key == "channel.doppler_hz") {
        config.doppler_hz = parse_double(key, value);
    } else if (key == "quantizer.scale_exponent") {
        config.scale_exponent = static_cast<int>(parse_int(key, value));
    } else if (key == "measure.n_instants") {
        config.n_instants = parse_u64(key, value);
    } else if (key == "predictor.feature") {
        config.feature = feature_from_name(value);
    } else if (key == "predictor.subcarrier") {
        config.subcarrier = static_cast<int>(parse_int(key, value));
    } else if (key == "predictor.order") {
        config.order = static_cast<int>(parse_int(key, value));
    } else if (key == "predictor.horizon") {
        config.horizon = static_cast<int>(parse_int(key, value));
    } else if (key == "predictor.split") {
        config.split = parse_double(key, value);
    } else if (key == "seed") {
        config.seed = parse_u64(key, value);
    } else {
        throw ConfigError("unknown configuration key '" + std::string(key) + "'");
    }
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }

    RunConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        set_config_key(config, view.substr(0, eq), view.substr(eq + 1));
    }
    return config;
}

std::string dump_run_config(const RunConfig& config) {
    char buf[64];
    std::string out;
    std::snprintf(buf, sizeof(buf), "%g", bandwidth_class_mhz(config.bandwidth_class));
    out += "grid.bandwidth_mhz = " + std::string(buf) + "\n";
    out += "scheduler.mode = ";
    out += (config.scheduler_mode == SchedulerMode::kFrozen ? "frozen" : "dynamic_stub");
    out += "\nscheduler.start_rb = " + std::to_string(config.start_rb);
    out += "\nscheduler.rb_count = " + std::to_string(config.rb_count);
    std::snprintf(buf, sizeof(buf), "%g", config.snr_db);
    out += "\nscheduler.snr_db = " + std::string(buf);
    out += "\nchannel.model = ";
    out += (config.channel_model == ChannelModel::kFlatRayleighJakes ? "flat_rayleigh_jakes"
                                                                     : "static");
    std::snprintf(buf, sizeof(buf), "%g", config.doppler_hz);
    out += "\nchannel.doppler_hz = " + std::string(buf);
    out += "\nquantizer.scale_exponent = " + std::to_string(config.scale_exponent);
    out += "\nmeasure.n_instants = " + std::to_string(config.n_instants);
    out += "\npredictor.feature = ";
    out += (config.feature == Feature::kEnvelope ? "envelope" : "real_part");
    out += "\npredictor.subcarrier = " + std::to_string(config.subcarrier);
    out += "\npredictor.order = " + std::to_string(config.order);
    out += "\npredictor.horizon = " + std::to_string(config.horizon);
    std::snprintf(buf, sizeof(buf), "%g", config.split);
    out += "\npredictor.split = " + std::string(buf);
    out += "\nseed = " + std::to_string(config.seed);
    out += "\n";
    return out;
}

void apply_env_overrides(RunConfig& config) {
    if (const char* seed = std::getenv("CHTR_SEED")) {
        config.seed = parse_u64("CHTR_SEED", seed);
    }
}

MeasureOutput run_measure(const RunConfig& config) {
    if (config.scheduler_mode != SchedulerMode::kFrozen) {
        throw ConfigError("trace capture needs scheduler.mode = frozen; dynamic allocation"
                          " breaks the constant per-instant geometry");
    }
    if (config.scale_exponent < -128 || config.scale_exponent > 127) {
        throw ConfigError("quantizer.scale_exponent must fit a signed byte");
    }

    const GridConfig grid = grid_dimensions(config.bandwidth_class);
    // snr_db = +inf disables noise; the CQI freeze then pins to the top of
    // the map instead of rejecting the out-of-range value.
    const double cqi_snr =
        std::isinf(config.snr_db) && config.snr_db > 0.0 ? kCqiSnrMaxDb : config.snr_db;
    SchedulerState scheduler = make_scheduler(SchedulerMode::kFrozen, config.start_rb,
                                              config.rb_count, cqi_snr, grid, config.seed);

    const std::size_t n_sc = static_cast<std::size_t>(config.rb_count) * kSubcarriersPerRb;
    std::vector<Iq16> samples;
    samples.reserve(config.n_instants * n_sc);
    std::size_t saturation_count = 0;

    if (config.n_instants > 0) {
        ChannelModelConfig channel_config;
        channel_config.model = config.channel_model;
        channel_config.doppler_hz = config.doppler_hz;
        channel_config.snr_db = config.snr_db;
        channel_config.seed = splitmix64(config.seed ^ kChannelStreamTag);
        const ChannelRealization realization =
            generate_channel(channel_config, config.n_instants);

        SplitMix64 noise_rng(splitmix64(config.seed ^ kNoiseStreamTag));
        Grant grant = next_grant(scheduler);
        for (std::uint64_t slot = 0; slot < config.n_instants; ++slot) {
            if (slot > 0 && slot % 2 == 0) {
                grant = next_grant(scheduler);
            }
            const PilotSequence pilots = generate_pilots(config.seed, slot, grant);
            const auto received =
                apply_channel(pilots, realization.h_series[slot], config.snr_db, noise_rng);
            const EstimateBlock block = ls_estimate(received, pilots);
            QuantizedBlock quantized = quantize_block(block, config.scale_exponent);
            saturation_count += quantized.saturation_count;
            samples.insert(samples.end(), quantized.samples.begin(), quantized.samples.end());
        }
    }

    TraceHeader header;
    header.bandwidth_class = config.bandwidth_class;
    header.start_rb = static_cast<std::uint16_t>(config.start_rb);
    header.rb_count = static_cast<std::uint16_t>(config.rb_count);
    header.pilot_interval_slots = 1;
    header.scale_exponent = static_cast<std::int8_t>(config.scale_exponent);
    header.n_instants = config.n_instants;
    header.seed = config.seed;
    header.channel_model = config.channel_model;
    header.doppler_hz = static_cast<float>(config.doppler_hz);
    header.snr_db = static_cast<float>(config.snr_db);

    MeasureOutput out;
    out.trace_bytes = write_trace(header, samples);
    out.summary.n_instants = config.n_instants;
    out.summary.n_subcarriers = static_cast<int>(n_sc);
    out.summary.span_s = instants_to_duration_s(config.n_instants);
    out.summary.throughput_bits_per_s =
        throughput_bits_per_s(config.rb_count, grid.slot_duration_s);
    out.summary.saturation_count = saturation_count;
    out.summary.trace_bytes = out.trace_bytes.size();
    return out;
}

MeasureSummary run_measure_to_file(const RunConfig& config,
                                   const std::filesystem::path& out_path) {
    MeasureOutput output = run_measure(config);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError("cannot open '" + out_path.string() + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(output.trace_bytes.data()),
              static_cast<std::streamsize>(output.trace_bytes.size()));
    if (!out) {
        throw FormatError("short write to '" + out_path.string() + "'");
    }
    return output.summary;
}

std::string format_summary(const MeasureSummary& summary) {
    char buf[64];
    std::string out;
    out += "instants=" + std::to_string(summary.n_instants) + "\n";
    out += "subcarriers=" + std::to_string(summary.n_subcarriers) + "\n";
    std::snprintf(buf, sizeof(buf), "%.9g", summary.span_s);
    out += "span_s=" + std::string(buf) + "\n";
    std::snprintf(buf, sizeof(buf), "%.9g", summary.throughput_bits_per_s);
    out += "throughput_bits_per_s=" + std::string(buf) + "\n";
    out += "saturated_components=" + std::to_string(summary.saturation_count) + "\n";
    out += "trace_bytes=" + std::to_string(summary.trace_bytes) + "\n";
    return out;
}

}  // namespace chtr
