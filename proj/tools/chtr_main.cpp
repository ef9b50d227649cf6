/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "chtr/errors.hpp"
#include "chtr/pipeline.hpp"
#include "chtr/predictor.hpp"
#include "chtr/trace_io.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitFormat = 3;
constexpr int kExitNumerical = 4;

struct MeasureArgs {
    std::string config_path;
    std::string out_path = "trace.chtr";
    double bandwidth_mhz = 5.0;
    std::string mode = "frozen";
    int start_rb = 0;
    int rb_count = 3;
    double snr_db = 20.0;
    std::string model = "flat_rayleigh_jakes";
    double doppler_hz = 10.0;
    int scale_exponent = 14;
    std::uint64_t n_instants = 240;
    std::uint64_t seed = 1;
};

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw chtr::FormatError("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    if (!out) {
        throw chtr::FormatError("short write to '" + path.string() + "'");
    }
}

int run_measure_command(const MeasureArgs& args, const CLI::App& cmd) {
    chtr::RunConfig config;
    if (!args.config_path.empty()) {
        config = chtr::load_run_config(args.config_path);
    }
    chtr::apply_env_overrides(config);

    // Explicit flags win over the config file and the environment.
    auto passed = [&cmd](const std::string& flag) { return cmd.count(flag) > 0; };
    if (passed("--bandwidth-mhz")) {
        config.bandwidth_class = chtr::bandwidth_class_from_mhz(args.bandwidth_mhz);
    }
    if (passed("--mode")) {
        config.scheduler_mode = chtr::scheduler_mode_from_name(args.mode);
    }
    if (passed("--start-rb")) {
        config.start_rb = args.start_rb;
    }
    if (passed("--rb-count")) {
        config.rb_count = args.rb_count;
    }
    if (passed("--snr-db")) {
        config.snr_db = args.snr_db;
    }
    if (passed("--model")) {
        config.channel_model = chtr::channel_model_from_name(args.model);
    }
    if (passed("--doppler-hz")) {
        config.doppler_hz = args.doppler_hz;
    }
    if (passed("--scale-exponent")) {
        config.scale_exponent = args.scale_exponent;
    }
    if (passed("--n-instants")) {
        config.n_instants = args.n_instants;
    }
    if (passed("--seed")) {
        config.seed = args.seed;
    }

    const chtr::MeasureSummary summary = chtr::run_measure_to_file(config, args.out_path);
    if (summary.n_instants == 0) {
        std::cerr << "warning: 0 instants requested, wrote a header-only trace\n";
    }
    std::cout << chtr::format_summary(summary);
    std::cout << "trace=" << args.out_path << "\n";
    return 0;
}

int run_export_command(const std::string& trace_path,
                       const std::string& mode,
                       int subcarrier,
                       const std::string& out_path) {
    const chtr::ChannelTrace trace = chtr::read_trace_file(trace_path);
    std::string csv;
    if (mode == "surface") {
        csv = chtr::export_csv_surface(trace);
    } else if (mode == "subcarrier") {
        csv = chtr::export_csv_subcarrier(trace, subcarrier);
    } else {
        throw chtr::ConfigError("unknown export mode '" + mode +
                                "' (valid: surface, subcarrier)");
    }
    write_text_file(out_path, csv);
    std::cout << "rows=" << std::count(csv.begin(), csv.end(), '\n') - 1 << "\n"
              << "csv=" << out_path << "\n";
    return 0;
}

struct PredictArgs {
    std::string trace_path;
    std::string config_path;
    std::string feature = "envelope";
    int subcarrier = 0;
    int order = 4;
    int horizon = 1;
    double split = 0.7;
    std::string report_path = "prediction.txt";
    std::string csv_path = "prediction.csv";
};

int run_predict_command(const PredictArgs& args, const CLI::App& cmd) {
    chtr::RunConfig config;
    if (!args.config_path.empty()) {
        config = chtr::load_run_config(args.config_path);
    }
    auto passed = [&cmd](const std::string& flag) { return cmd.count(flag) > 0; };
    if (passed("--feature")) {
        config.feature = chtr::feature_from_name(args.feature);
    }
    if (passed("--subcarrier")) {
        config.subcarrier = args.subcarrier;
    }
    if (passed("--order")) {
        config.order = args.order;
    }
    if (passed("--horizon")) {
        config.horizon = args.horizon;
    }
    if (passed("--split")) {
        config.split = args.split;
    }

    const chtr::ChannelTrace trace = chtr::read_trace_file(args.trace_path);
    const chtr::Evaluation evaluation = chtr::evaluate(
        trace, config.feature, config.subcarrier, config.order, config.horizon, config.split);

    const std::string report = chtr::format_report(evaluation.report);
    std::cout << report;
    write_text_file(args.report_path, report);
    write_text_file(args.csv_path, chtr::evaluation_csv(evaluation));
    std::cout << "report=" << args.report_path << "\n"
              << "csv=" << args.csv_path << "\n";
    return 0;
}

int run_info_command(const std::string& trace_path) {
    const chtr::ChannelTrace trace = chtr::read_trace_file(trace_path);
    const chtr::TraceHeader& header = trace.header;
    char buf[64];
    std::cout << "version=" << chtr::kTraceVersion << "\n";
    std::snprintf(buf, sizeof(buf), "%g", chtr::bandwidth_class_mhz(header.bandwidth_class));
    std::cout << "bandwidth_mhz=" << buf << "\n";
    std::cout << "start_rb=" << header.start_rb << "\n";
    std::cout << "rb_count=" << header.rb_count << "\n";
    std::cout << "subcarriers=" << header.n_subcarriers() << "\n";
    std::cout << "pilot_interval_slots=" << header.pilot_interval_slots << "\n";
    std::cout << "scale_exponent=" << static_cast<int>(header.scale_exponent) << "\n";
    std::cout << "n_instants=" << header.n_instants << "\n";
    std::snprintf(buf, sizeof(buf), "%.9g", chtr::instants_to_duration_s(header.n_instants));
    std::cout << "span_s=" << buf << "\n";
    std::cout << "seed=" << header.seed << "\n";
    std::cout << "channel_model="
              << (header.channel_model == chtr::ChannelModel::kFlatRayleighJakes
                      ? "flat_rayleigh_jakes"
                      : "static")
              << "\n";
    std::snprintf(buf, sizeof(buf), "%g", static_cast<double>(header.doppler_hz));
    std::cout << "doppler_hz=" << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%g", static_cast<double>(header.snr_db));
    std::cout << "snr_db=" << buf << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LTE uplink pilot-grid channel sounding: simulate, capture, predict"};
    app.require_subcommand(1);

    // measure
    MeasureArgs measure;
    CLI::App* measure_cmd =
        app.add_subcommand("measure", "Run the simulated sounding pipeline, write a .chtr trace");
    measure_cmd->add_option("--config", measure.config_path, "key=value config file");
    measure_cmd->add_option("-o,--out", measure.out_path, "output trace path")
        ->capture_default_str();
    measure_cmd->add_option("--bandwidth-mhz", measure.bandwidth_mhz,
                            "bandwidth class: 1.4, 3, 5, 10, 15, 20");
    measure_cmd->add_option("--mode", measure.mode, "scheduler mode: frozen, dynamic_stub");
    measure_cmd->add_option("--start-rb", measure.start_rb, "first allocated RB");
    measure_cmd->add_option("--rb-count", measure.rb_count, "allocated RB count");
    measure_cmd->add_option("--snr-db", measure.snr_db, "per-RE SNR in dB (inf = noiseless)");
    measure_cmd->add_option("--model", measure.model,
                            "channel model: flat_rayleigh_jakes, static");
    measure_cmd->add_option("--doppler-hz", measure.doppler_hz, "maximum Doppler frequency");
    measure_cmd->add_option("--scale-exponent", measure.scale_exponent,
                            "fixed-point scale exponent");
    measure_cmd->add_option("-n,--n-instants", measure.n_instants, "pilot instants to capture");
    measure_cmd->add_option("--seed", measure.seed, "run seed (CHTR_SEED overrides the config)");

    // export
    std::string export_trace;
    std::string export_mode = "surface";
    int export_subcarrier = 0;
    std::string export_out = "trace.csv";
    CLI::App* export_cmd = app.add_subcommand("export", "Export trace data as CSV");
    export_cmd->add_option("trace", export_trace, "input .chtr trace")->required();
    export_cmd->add_option("--mode", export_mode, "surface or subcarrier")
        ->capture_default_str();
    export_cmd->add_option("-k,--subcarrier", export_subcarrier,
                           "subcarrier index for --mode subcarrier");
    export_cmd->add_option("-o,--out", export_out, "output CSV path")->capture_default_str();

    // predict
    PredictArgs predict;
    CLI::App* predict_cmd =
        app.add_subcommand("predict", "Fit the AR baseline on a trace and report test MSE");
    predict_cmd->add_option("trace", predict.trace_path, "input .chtr trace")->required();
    predict_cmd->add_option("--config", predict.config_path,
                            "key=value config file (predictor.* keys)");
    predict_cmd->add_option("--feature", predict.feature, "envelope or real_part")
        ->capture_default_str();
    predict_cmd->add_option("-k,--subcarrier", predict.subcarrier, "subcarrier to evaluate")
        ->capture_default_str();
    predict_cmd->add_option("--order", predict.order, "AR order")->capture_default_str();
    predict_cmd->add_option("--horizon", predict.horizon,
                            "prediction horizon in pilot instants")
        ->capture_default_str();
    predict_cmd->add_option("--split", predict.split, "train fraction in (0, 1)")
        ->capture_default_str();
    predict_cmd->add_option("--report-out", predict.report_path, "report output path")
        ->capture_default_str();
    predict_cmd->add_option("--csv-out", predict.csv_path, "actual/predicted CSV path")
        ->capture_default_str();

    // info
    std::string info_trace;
    CLI::App* info_cmd = app.add_subcommand("info", "Print a trace header");
    info_cmd->add_option("trace", info_trace, "input .chtr trace")->required();

    try {
        app.parse(argc, argv);
        if (measure_cmd->parsed()) {
            return run_measure_command(measure, *measure_cmd);
        }
        if (export_cmd->parsed()) {
            return run_export_command(export_trace, export_mode, export_subcarrier, export_out);
        }
        if (predict_cmd->parsed()) {
            return run_predict_command(predict, *predict_cmd);
        }
        if (info_cmd->parsed()) {
            return run_info_command(info_trace);
        }
        return 0;
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return kExitConfig;
    } catch (const chtr::ConfigError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitConfig;
    } catch (const chtr::FormatError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitFormat;
    } catch (const chtr::NumericalError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
}
