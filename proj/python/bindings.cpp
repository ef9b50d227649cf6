/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <complex>
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

namespace py = pybind11;

namespace {

std::vector<std::uint8_t> to_byte_vector(const py::bytes& data) {
    const std::string buffer = data;
    return {buffer.begin(), buffer.end()};
}

py::bytes to_py_bytes(const std::vector<std::uint8_t>& bytes) {
    return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "LTE uplink pilot-grid channel sounding: simulation, LS estimation, "
              "fixed-point traces and prediction evaluation";

    // Exceptions mirror the C++ hierarchy so callers can match error classes.
    const auto base = py::register_exception<chtr::Error>(m, "ChtrError");
    py::register_exception<chtr::ConfigError>(m, "ConfigError", base);
    py::register_exception<chtr::FormatError>(m, "TraceFormatError", base);
    py::register_exception<chtr::NumericalError>(m, "NumericalError", base);

    py::enum_<chtr::BandwidthClass>(m, "BandwidthClass")
        .value("MHZ_1_4", chtr::BandwidthClass::kMhz1_4)
        .value("MHZ_3", chtr::BandwidthClass::kMhz3)
        .value("MHZ_5", chtr::BandwidthClass::kMhz5)
        .value("MHZ_10", chtr::BandwidthClass::kMhz10)
        .value("MHZ_15", chtr::BandwidthClass::kMhz15)
        .value("MHZ_20", chtr::BandwidthClass::kMhz20);

    py::enum_<chtr::ChannelModel>(m, "ChannelModel")
        .value("FLAT_RAYLEIGH_JAKES", chtr::ChannelModel::kFlatRayleighJakes)
        .value("STATIC", chtr::ChannelModel::kStatic);

    py::enum_<chtr::SchedulerMode>(m, "SchedulerMode")
        .value("FROZEN", chtr::SchedulerMode::kFrozen)
        .value("DYNAMIC_STUB", chtr::SchedulerMode::kDynamicStub);

    py::enum_<chtr::Feature>(m, "Feature")
        .value("ENVELOPE", chtr::Feature::kEnvelope)
        .value("REAL_PART", chtr::Feature::kRealPart);

    py::class_<chtr::GridConfig>(m, "GridConfig")
        .def_readonly("bandwidth_class", &chtr::GridConfig::bandwidth_class)
        .def_readonly("n_rb_total", &chtr::GridConfig::n_rb_total)
        .def_readonly("subcarriers_per_rb", &chtr::GridConfig::subcarriers_per_rb)
        .def_readonly("symbols_per_slot", &chtr::GridConfig::symbols_per_slot)
        .def_readonly("slots_per_subframe", &chtr::GridConfig::slots_per_subframe)
        .def_readonly("subframes_per_frame", &chtr::GridConfig::subframes_per_frame)
        .def_readonly("slot_duration_s", &chtr::GridConfig::slot_duration_s)
        .def_readonly("pilot_symbol_in_slot", &chtr::GridConfig::pilot_symbol_in_slot)
        .def("n_subcarriers_total", &chtr::GridConfig::n_subcarriers_total)
        .def("symbols_per_frame", &chtr::GridConfig::symbols_per_frame);

    py::class_<chtr::ReIndex>(m, "ReIndex")
        .def_readonly("k", &chtr::ReIndex::k)
        .def_readonly("l", &chtr::ReIndex::l)
        .def("__repr__", [](const chtr::ReIndex& re) {
            return "ReIndex(k=" + std::to_string(re.k) + ", l=" + std::to_string(re.l) + ")";
        });

    py::class_<chtr::Grant>(m, "Grant")
        .def(py::init<int, int, std::uint64_t>(), py::arg("start_rb"), py::arg("rb_count"),
             py::arg("subframe_index") = 0)
        .def_readwrite("start_rb", &chtr::Grant::start_rb)
        .def_readwrite("rb_count", &chtr::Grant::rb_count)
        .def_readwrite("subframe_index", &chtr::Grant::subframe_index)
        .def("n_subcarriers", &chtr::Grant::n_subcarriers);

    py::class_<chtr::PilotSequence>(m, "PilotSequence")
        .def_readonly("seed", &chtr::PilotSequence::seed)
        .def_readonly("slot_counter", &chtr::PilotSequence::slot_counter)
        .def_readonly("values", &chtr::PilotSequence::values);

    py::class_<chtr::ChannelModelConfig>(m, "ChannelModelConfig")
        .def(py::init<>())
        .def_readwrite("model", &chtr::ChannelModelConfig::model)
        .def_readwrite("doppler_hz", &chtr::ChannelModelConfig::doppler_hz)
        .def_readwrite("snr_db", &chtr::ChannelModelConfig::snr_db)
        .def_readwrite("seed", &chtr::ChannelModelConfig::seed);

    py::class_<chtr::ChannelRealization>(m, "ChannelRealization")
        .def_readonly("h_series", &chtr::ChannelRealization::h_series)
        .def_readonly("sample_interval_s", &chtr::ChannelRealization::sample_interval_s);

    py::class_<chtr::EstimateBlock>(m, "EstimateBlock")
        .def_readonly("slot_counter", &chtr::EstimateBlock::slot_counter)
        .def_readonly("estimates", &chtr::EstimateBlock::estimates);

    py::class_<chtr::Iq16>(m, "Iq16")
        .def(py::init([](int re, int im) {
                 return chtr::Iq16{static_cast<std::int16_t>(re),
                                   static_cast<std::int16_t>(im)};
             }),
             py::arg("re"), py::arg("im"))
        .def_readwrite("re", &chtr::Iq16::re)
        .def_readwrite("im", &chtr::Iq16::im)
        .def(py::self == py::self)
        .def("__repr__", [](const chtr::Iq16& s) {
            return "Iq16(" + std::to_string(s.re) + ", " + std::to_string(s.im) + ")";
        });

    py::class_<chtr::QuantizedBlock>(m, "QuantizedBlock")
        .def_readonly("samples", &chtr::QuantizedBlock::samples)
        .def_readonly("saturation_count", &chtr::QuantizedBlock::saturation_count);

    py::class_<chtr::SchedulerState>(m, "SchedulerState")
        .def_readonly("mode", &chtr::SchedulerState::mode)
        .def_readonly("frozen_cqi", &chtr::SchedulerState::frozen_cqi);

    py::class_<chtr::TraceHeader>(m, "TraceHeader")
        .def(py::init<>())
        .def_readwrite("bandwidth_class", &chtr::TraceHeader::bandwidth_class)
        .def_readwrite("start_rb", &chtr::TraceHeader::start_rb)
        .def_readwrite("rb_count", &chtr::TraceHeader::rb_count)
        .def_readwrite("pilot_interval_slots", &chtr::TraceHeader::pilot_interval_slots)
        .def_readwrite("scale_exponent", &chtr::TraceHeader::scale_exponent)
        .def_readwrite("n_instants", &chtr::TraceHeader::n_instants)
        .def_readwrite("seed", &chtr::TraceHeader::seed)
        .def_readwrite("channel_model", &chtr::TraceHeader::channel_model)
        .def_readwrite("doppler_hz", &chtr::TraceHeader::doppler_hz)
        .def_readwrite("snr_db", &chtr::TraceHeader::snr_db)
        .def("n_subcarriers", &chtr::TraceHeader::n_subcarriers);

    py::class_<chtr::ChannelTrace>(m, "ChannelTrace")
        .def_readonly("header", &chtr::ChannelTrace::header)
        .def_readonly("samples", &chtr::ChannelTrace::samples)
        .def("raw", &chtr::ChannelTrace::raw, py::arg("instant"), py::arg("subcarrier"))
        .def("estimate", &chtr::ChannelTrace::estimate, py::arg("instant"),
             py::arg("subcarrier"))
        .def("estimates", &chtr::ChannelTrace::estimates, py::arg("instant"));

    py::class_<chtr::NormalizedSeries>(m, "NormalizedSeries")
        .def_readonly("values", &chtr::NormalizedSeries::values)
        .def_readonly("mean", &chtr::NormalizedSeries::mean)
        .def_readonly("std_dev", &chtr::NormalizedSeries::std_dev);

    py::class_<chtr::ArModel>(m, "ArModel")
        .def_readonly("order", &chtr::ArModel::order)
        .def_readonly("coefficients", &chtr::ArModel::coefficients)
        .def_readonly("training_mse", &chtr::ArModel::training_mse);

    py::class_<chtr::PredictionReport>(m, "PredictionReport")
        .def_readonly("horizon", &chtr::PredictionReport::horizon)
        .def_readonly("order", &chtr::PredictionReport::order)
        .def_readonly("split", &chtr::PredictionReport::split)
        .def_readonly("mse", &chtr::PredictionReport::mse)
        .def_readonly("n_test", &chtr::PredictionReport::n_test)
        .def_readonly("norm_mean", &chtr::PredictionReport::norm_mean)
        .def_readonly("norm_std", &chtr::PredictionReport::norm_std)
        .def_readonly("feature", &chtr::PredictionReport::feature)
        .def_readonly("subcarrier", &chtr::PredictionReport::subcarrier)
        .def_readonly("predictor", &chtr::PredictionReport::predictor);

    py::class_<chtr::Evaluation>(m, "Evaluation")
        .def_readonly("report", &chtr::Evaluation::report)
        .def_readonly("instants", &chtr::Evaluation::instants)
        .def_readonly("actual", &chtr::Evaluation::actual)
        .def_readonly("predicted", &chtr::Evaluation::predicted);

    py::class_<chtr::RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("bandwidth_class", &chtr::RunConfig::bandwidth_class)
        .def_readwrite("scheduler_mode", &chtr::RunConfig::scheduler_mode)
        .def_readwrite("start_rb", &chtr::RunConfig::start_rb)
        .def_readwrite("rb_count", &chtr::RunConfig::rb_count)
        .def_readwrite("snr_db", &chtr::RunConfig::snr_db)
        .def_readwrite("channel_model", &chtr::RunConfig::channel_model)
        .def_readwrite("doppler_hz", &chtr::RunConfig::doppler_hz)
        .def_readwrite("scale_exponent", &chtr::RunConfig::scale_exponent)
        .def_readwrite("n_instants", &chtr::RunConfig::n_instants)
        .def_readwrite("seed", &chtr::RunConfig::seed)
        .def_readwrite("feature", &chtr::RunConfig::feature)
        .def_readwrite("subcarrier", &chtr::RunConfig::subcarrier)
        .def_readwrite("order", &chtr::RunConfig::order)
        .def_readwrite("horizon", &chtr::RunConfig::horizon)
        .def_readwrite("split", &chtr::RunConfig::split);

    py::class_<chtr::MeasureSummary>(m, "MeasureSummary")
        .def_readonly("n_instants", &chtr::MeasureSummary::n_instants)
        .def_readonly("n_subcarriers", &chtr::MeasureSummary::n_subcarriers)
        .def_readonly("span_s", &chtr::MeasureSummary::span_s)
        .def_readonly("throughput_bits_per_s", &chtr::MeasureSummary::throughput_bits_per_s)
        .def_readonly("saturation_count", &chtr::MeasureSummary::saturation_count)
        .def_readonly("trace_bytes", &chtr::MeasureSummary::trace_bytes);

    py::class_<chtr::MeasureOutput>(m, "MeasureOutput")
        .def_property_readonly(
            "trace_bytes",
            [](const chtr::MeasureOutput& out) { return to_py_bytes(out.trace_bytes); })
        .def_readonly("summary", &chtr::MeasureOutput::summary);

    // frame grid
    m.def("grid_dimensions", &chtr::grid_dimensions, py::arg("bandwidth_class"));
    m.def("bandwidth_class_from_mhz", &chtr::bandwidth_class_from_mhz, py::arg("mhz"));
    m.def("bandwidth_class_mhz", &chtr::bandwidth_class_mhz, py::arg("bandwidth_class"));
    m.def("pilot_res", &chtr::pilot_res, py::arg("grid"), py::arg("grant"),
          py::arg("subframe_index"));
    m.def("instants_to_duration_s", &chtr::instants_to_duration_s, py::arg("n_instants"));

    // pilots and channel
    m.def("generate_pilots", &chtr::generate_pilots, py::arg("seed"), py::arg("slot_counter"),
          py::arg("grant"));
    m.def("generate_channel", &chtr::generate_channel, py::arg("config"),
          py::arg("n_instants"));
    m.def(
        "apply_channel",
        [](const chtr::PilotSequence& pilots, std::complex<double> h, double snr_db,
           std::uint64_t noise_seed) {
            chtr::SplitMix64 rng(noise_seed);
            return chtr::apply_channel(pilots, h, snr_db, rng);
        },
        py::arg("pilots"), py::arg("h"), py::arg("snr_db"), py::arg("noise_seed"));
    m.def("theoretical_autocorr", &chtr::theoretical_autocorr, py::arg("doppler_hz"),
          py::arg("lag_s"));
    m.def("noise_variance", &chtr::noise_variance, py::arg("snr_db"));

    // estimation and fixed point
    m.def(
        "ls_estimate",
        [](const std::vector<std::complex<double>>& received,
           const chtr::PilotSequence& pilots) { return chtr::ls_estimate(received, pilots); },
        py::arg("received"), py::arg("pilots"));
    m.def(
        "quantize_block",
        [](const std::vector<std::complex<double>>& values, int scale_exponent) {
            return chtr::quantize_block(values, scale_exponent);
        },
        py::arg("values"), py::arg("scale_exponent"));
    m.def("dequantize", &chtr::dequantize, py::arg("sample"), py::arg("scale_exponent"));
    m.def(
        "pack_lanes",
        [](const std::vector<chtr::Iq16>& samples) {
            return to_py_bytes(chtr::pack_lanes(samples));
        },
        py::arg("samples"));
    m.def(
        "unpack_lanes",
        [](const py::bytes& data, std::size_t n) {
            return chtr::unpack_lanes(to_byte_vector(data), n);
        },
        py::arg("data"), py::arg("n"));
    m.def("throughput_bits_per_s", &chtr::throughput_bits_per_s, py::arg("n_rb"),
          py::arg("slot_duration_s") = chtr::kSlotDurationS);

    // scheduler
    m.def("override_cqi", &chtr::override_cqi, py::arg("snr_db"));
    m.def("make_scheduler", &chtr::make_scheduler, py::arg("mode"), py::arg("start_rb"),
          py::arg("rb_count"), py::arg("snr_db"), py::arg("grid"), py::arg("seed") = 0);
    m.def("next_grant", &chtr::next_grant, py::arg("state"));

    // trace container
    m.def(
        "read_trace",
        [](const py::bytes& data) { return chtr::read_trace(to_byte_vector(data)); },
        py::arg("data"));
    m.def("read_trace_file", &chtr::read_trace_file, py::arg("path"));
    m.def(
        "write_trace",
        [](const chtr::TraceHeader& header, const std::vector<chtr::Iq16>& samples) {
            return to_py_bytes(chtr::write_trace(header, samples));
        },
        py::arg("header"), py::arg("samples"));
    m.def(
        "write_trace_file",
        [](const std::filesystem::path& path, const chtr::TraceHeader& header,
           const std::vector<chtr::Iq16>& samples) {
            chtr::write_trace_file(path, header, samples);
        },
        py::arg("path"), py::arg("header"), py::arg("samples"));
    m.def("export_csv_surface", &chtr::export_csv_surface, py::arg("trace"));
    m.def("export_csv_subcarrier", &chtr::export_csv_subcarrier, py::arg("trace"),
          py::arg("subcarrier"));

    // prediction harness
    m.def(
        "zscore",
        [](const std::vector<double>& series) { return chtr::zscore(series); },
        py::arg("series"));
    m.def("denormalize", &chtr::denormalize, py::arg("series"));
    m.def(
        "fit_ar",
        [](const std::vector<double>& normalized_train, int order) {
            return chtr::fit_ar(std::span<const double>(normalized_train), order);
        },
        py::arg("normalized_train"), py::arg("order"));
    m.def(
        "predict",
        [](const chtr::ArModel& model, const std::vector<double>& history, int horizon) {
            return chtr::predict(model, history, horizon);
        },
        py::arg("model"), py::arg("history"), py::arg("horizon") = 1);
    m.def("extract_feature_series", &chtr::extract_feature_series, py::arg("trace"),
          py::arg("feature"), py::arg("subcarrier"));
    m.def("evaluate", &chtr::evaluate, py::arg("trace"), py::arg("feature"),
          py::arg("subcarrier"), py::arg("order") = 4, py::arg("horizon") = 1,
          py::arg("split") = 0.7);
    m.def("wiener_oracle", &chtr::wiener_oracle, py::arg("doppler_hz"),
          py::arg("sample_interval_s"), py::arg("order"), py::arg("snr_db"));
    m.def("format_report", &chtr::format_report, py::arg("report"));
    m.def("evaluation_csv", &chtr::evaluation_csv, py::arg("evaluation"));

    // pipeline
    m.def("set_config_key", &chtr::set_config_key, py::arg("config"), py::arg("key"),
          py::arg("value"));
    m.def("load_run_config", &chtr::load_run_config, py::arg("path"));
    m.def("dump_run_config", &chtr::dump_run_config, py::arg("config"));
    m.def("run_measure", &chtr::run_measure, py::arg("config"));
    m.def("run_measure_to_file", &chtr::run_measure_to_file, py::arg("config"),
          py::arg("out_path"));
    m.def("format_summary", &chtr::format_summary, py::arg("summary"));

#ifdef CHTR_VERSION
    m.attr("__version__") = CHTR_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
