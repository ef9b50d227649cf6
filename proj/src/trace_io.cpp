/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "chtr/trace_io.hpp"

#include <bit>
#include <cstdio>
#include <fstream>

#include "chtr/errors.hpp"

namespace chtr {

namespace {

// Header field offsets. The layout is frozen for version 1; see
// docs/trace_format.md.
constexpr std::size_t kOffMagic = 0;
constexpr std::size_t kOffVersion = 4;
constexpr std::size_t kOffBandwidth = 6;
constexpr std::size_t kOffStartRb = 7;
constexpr std::size_t kOffRbCount = 9;
constexpr std::size_t kOffPilotInterval = 11;
constexpr std::size_t kOffScaleExponent = 13;
constexpr std::size_t kOffNInstants = 14;
constexpr std::size_t kOffSeed = 22;
constexpr std::size_t kOffChannelModel = 30;
constexpr std::size_t kOffDopplerHz = 31;
constexpr std::size_t kOffSnrDb = 35;

void put_u16(std::vector<std::uint8_t>& b, std::size_t off, std::uint16_t v) {
    b[off] = static_cast<std::uint8_t>(v & 0xFF);
    b[off + 1] = static_cast<std::uint8_t>(v >> 8);
}

void put_u64(std::vector<std::uint8_t>& b, std::size_t off, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        b[off + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v >> (8 * i));
    }
}

void put_f32(std::vector<std::uint8_t>& b, std::size_t off, float v) {
    const auto bits = std::bit_cast<std::uint32_t>(v);
    for (int i = 0; i < 4; ++i) {
        b[off + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(bits >> (8 * i));
    }
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t off) {
    return static_cast<std::uint16_t>(b[off] | (static_cast<std::uint16_t>(b[off + 1]) << 8));
}

std::uint64_t get_u64(std::span<const std::uint8_t> b, std::size_t off) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
        v = (v << 8) | b[off + static_cast<std::size_t>(i)];
    }
    return v;
}

float get_f32(std::span<const std::uint8_t> b, std::size_t off) {
    std::uint32_t bits = 0;
    for (int i = 3; i >= 0; --i) {
        bits = (bits << 8) | b[off + static_cast<std::size_t>(i)];
    }
    return std::bit_cast<float>(bits);
}

void append_value(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    out += buf;
}

}  // namespace

Iq16 ChannelTrace::raw(std::uint64_t instant, std::size_t subcarrier) const {
    if (instant >= header.n_instants) {
        throw ConfigError("instant " + std::to_string(instant) + " outside trace of " +
                          std::to_string(header.n_instants) + " instants");
    }
    const std::size_t n_sc = header.n_subcarriers();
    if (subcarrier >= n_sc) {
        throw ConfigError("subcarrier " + std::to_string(subcarrier) +
                          " outside trace of " + std::to_string(n_sc) + " subcarriers");
    }
    return samples[instant * n_sc + subcarrier];
}

std::complex<double> ChannelTrace::estimate(std::uint64_t instant, std::size_t subcarrier) const {
    return dequantize(raw(instant, subcarrier), header.scale_exponent);
}

std::vector<std::complex<double>> ChannelTrace::estimates(std::uint64_t instant) const {
    const std::size_t n_sc = header.n_subcarriers();
    std::vector<std::complex<double>> out;
    out.reserve(n_sc);
    for (std::size_t k = 0; k < n_sc; ++k) {
        out.push_back(estimate(instant, k));
    }
    return out;
}

std::vector<std::uint8_t> encode_header(const TraceHeader& header) {
    std::vector<std::uint8_t> bytes(kTraceHeaderBytes, 0);
    for (std::size_t i = 0; i < kTraceMagic.size(); ++i) {
        bytes[kOffMagic + i] = kTraceMagic[i];
    }
    put_u16(bytes, kOffVersion, kTraceVersion);
    bytes[kOffBandwidth] = static_cast<std::uint8_t>(header.bandwidth_class);
    put_u16(bytes, kOffStartRb, header.start_rb);
    put_u16(bytes, kOffRbCount, header.rb_count);
    put_u16(bytes, kOffPilotInterval, header.pilot_interval_slots);
    bytes[kOffScaleExponent] = static_cast<std::uint8_t>(header.scale_exponent);
    put_u64(bytes, kOffNInstants, header.n_instants);
    put_u64(bytes, kOffSeed, header.seed);
    bytes[kOffChannelModel] = static_cast<std::uint8_t>(header.channel_model);
    put_f32(bytes, kOffDopplerHz, header.doppler_hz);
    put_f32(bytes, kOffSnrDb, header.snr_db);
    return bytes;
}

TraceHeader decode_header(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kTraceHeaderBytes) {
        throw FormatError("trace shorter than the 40-byte header", bytes.size());
    }
    for (std::size_t i = 0; i < kTraceMagic.size(); ++i) {
        if (bytes[kOffMagic + i] != kTraceMagic[i]) {
            throw FormatError("bad magic, not a channel trace", kOffMagic + i);
        }
    }
    const std::uint16_t version = get_u16(bytes, kOffVersion);
    if (version != kTraceVersion) {
        throw FormatError("unsupported trace version " + std::to_string(version) +
                              " (reader supports version 1)",
                          kOffVersion);
    }

    TraceHeader header;
    const std::uint8_t bw_code = bytes[kOffBandwidth];
    if (bw_code > static_cast<std::uint8_t>(BandwidthClass::kMhz20)) {
        throw FormatError("unknown bandwidth class code " + std::to_string(bw_code),
                          kOffBandwidth);
    }
    header.bandwidth_class = static_cast<BandwidthClass>(bw_code);
    header.start_rb = get_u16(bytes, kOffStartRb);
    header.rb_count = get_u16(bytes, kOffRbCount);
    if (header.rb_count < 1) {
        throw FormatError("trace header declares an empty allocation", kOffRbCount);
    }
    const int n_rb_total = grid_dimensions(header.bandwidth_class).n_rb_total;
    if (header.start_rb + header.rb_count > n_rb_total) {
        throw FormatError("allocation exceeds the " + std::to_string(n_rb_total) +
                              "-RB grid of its bandwidth class",
                          kOffRbCount);
    }
    header.pilot_interval_slots = get_u16(bytes, kOffPilotInterval);
    if (header.pilot_interval_slots < 1) {
        throw FormatError("pilot interval must be at least one slot", kOffPilotInterval);
    }
    header.scale_exponent = static_cast<std::int8_t>(bytes[kOffScaleExponent]);
    header.n_instants = get_u64(bytes, kOffNInstants);
    header.seed = get_u64(bytes, kOffSeed);
    const std::uint8_t model_code = bytes[kOffChannelModel];
    if (model_code > static_cast<std::uint8_t>(ChannelModel::kStatic)) {
        throw FormatError("unknown channel model code " + std::to_string(model_code),
                          kOffChannelModel);
    }
    header.channel_model = static_cast<ChannelModel>(model_code);
    header.doppler_hz = get_f32(bytes, kOffDopplerHz);
    header.snr_db = get_f32(bytes, kOffSnrDb);
    return header;
}

std::vector<std::uint8_t> write_trace(const TraceHeader& header,
                                      std::span<const Iq16> samples) {
    const std::size_t expected = header.n_instants * header.n_subcarriers();
    if (samples.size() != expected) {
        throw ConfigError("trace payload has " + std::to_string(samples.size()) +
                          " samples, header declares " + std::to_string(expected) + " (" +
                          std::to_string(header.n_instants) + " instants x " +
                          std::to_string(header.n_subcarriers()) + " subcarriers)");
    }

    std::vector<std::uint8_t> bytes = encode_header(header);
    bytes.reserve(kTraceHeaderBytes + header.payload_bytes());
    const std::size_t n_sc = header.n_subcarriers();
    for (std::uint64_t t = 0; t < header.n_instants; ++t) {
        const auto packed = pack_lanes(samples.subspan(t * n_sc, n_sc));
        bytes.insert(bytes.end(), packed.begin(), packed.end());
    }
    return bytes;
}

ChannelTrace read_trace(std::span<const std::uint8_t> bytes) {
    ChannelTrace trace;
    trace.header = decode_header(bytes);

    // Guard the size arithmetic: a corrupted instant count must not wrap the
    // expected-size computation around 2^64.
    const std::size_t group = packed_size_bytes(trace.header.n_subcarriers());
    if (trace.header.n_instants > (SIZE_MAX - kTraceHeaderBytes) / group) {
        throw FormatError("header declares an implausible instant count " +
                              std::to_string(trace.header.n_instants),
                          kOffNInstants);
    }
    const std::size_t expected = kTraceHeaderBytes + trace.header.payload_bytes();
    if (bytes.size() != expected) {
        throw FormatError("trace is " + std::to_string(bytes.size()) +
                              " bytes, header declares " + std::to_string(expected),
                          std::min(bytes.size(), expected));
    }

    const std::size_t n_sc = trace.header.n_subcarriers();
    const std::size_t group_bytes = packed_size_bytes(n_sc);
    trace.samples.reserve(trace.header.n_instants * n_sc);
    for (std::uint64_t t = 0; t < trace.header.n_instants; ++t) {
        const auto lane = bytes.subspan(kTraceHeaderBytes + t * group_bytes, group_bytes);
        const auto unpacked = unpack_lanes(lane, n_sc);
        trace.samples.insert(trace.samples.end(), unpacked.begin(), unpacked.end());
    }
    return trace;
}

void write_trace_file(const std::filesystem::path& path,
                      const TraceHeader& header,
                      std::span<const Iq16> samples) {
    const auto bytes = write_trace(header, samples);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError("cannot open '" + path.string() + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw FormatError("short write to '" + path.string() + "'");
    }
}

ChannelTrace read_trace_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open '" + path.string() + "'");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_trace(bytes);
}

std::string export_csv_surface(const ChannelTrace& trace) {
    std::string out = "instant,subcarrier,magnitude\n";
    const std::size_t n_sc = trace.header.n_subcarriers();
    for (std::uint64_t t = 0; t < trace.header.n_instants; ++t) {
        for (std::size_t k = 0; k < n_sc; ++k) {
            out += std::to_string(t);
            out += ',';
            out += std::to_string(k);
            out += ',';
            append_value(out, std::abs(trace.estimate(t, k)));
            out += '\n';
        }
    }
    return out;
}

std::string export_csv_subcarrier(const ChannelTrace& trace, int subcarrier) {
    const std::size_t n_sc = trace.header.n_subcarriers();
    if (subcarrier < 0 || static_cast<std::size_t>(subcarrier) >= n_sc) {
        throw ConfigError("subcarrier " + std::to_string(subcarrier) + " out of range (valid: 0.." +
                          std::to_string(n_sc - 1) + ")");
    }

    std::string out = "instant,wall_time_s,real,imag,magnitude\n";
    for (std::uint64_t t = 0; t < trace.header.n_instants; ++t) {
        const auto value = trace.estimate(t, static_cast<std::size_t>(subcarrier));
        out += std::to_string(t);
        out += ',';
        append_value(out, instants_to_duration_s(t));
        out += ',';
        append_value(out, value.real());
        out += ',';
        append_value(out, value.imag());
        out += ',';
        append_value(out, std::abs(value));
        out += '\n';
    }
    return out;
}

}  // namespace chtr
