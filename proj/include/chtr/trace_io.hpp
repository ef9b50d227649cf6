/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "chtr/estimator.hpp"
#include "chtr/fading_channel.hpp"
#include "chtr/frame_grid.hpp"

namespace chtr {

inline constexpr std::array<std::uint8_t, 4> kTraceMagic = {'C', 'H', 'T', 'R'};
inline constexpr std::uint16_t kTraceVersion = 1;
/// Fixed header size; multi-byte fields little-endian, reals IEEE-754
/// binary32, zero-padded to 40 bytes. Field layout in docs/trace_format.md.
inline constexpr std::size_t kTraceHeaderBytes = 40;

struct TraceHeader {
    BandwidthClass bandwidth_class = BandwidthClass::kMhz5;
    std::uint16_t start_rb = 0;
    std::uint16_t rb_count = 1;
    std::uint16_t pilot_interval_slots = 1;
    std::int8_t scale_exponent = 14;
    std::uint64_t n_instants = 0;
    std::uint64_t seed = 0;
    ChannelModel channel_model = ChannelModel::kFlatRayleighJakes;
    float doppler_hz = 0.0F;
    float snr_db = 0.0F;

    [[nodiscard]] std::size_t n_subcarriers() const noexcept {
        return static_cast<std::size_t>(rb_count) * kSubcarriersPerRb;
    }
    [[nodiscard]] std::size_t payload_bytes() const noexcept {
        return n_instants * packed_size_bytes(n_subcarriers());
    }

    friend bool operator==(const TraceHeader&, const TraceHeader&) = default;
};

/// In-memory trace: header plus one Iq16 per (instant, subcarrier),
/// instant-major. Lane-group padding exists only in the serialized form.
struct ChannelTrace {
    TraceHeader header;
    std::vector<Iq16> samples;

    [[nodiscard]] Iq16 raw(std::uint64_t instant, std::size_t subcarrier) const;
    [[nodiscard]] std::complex<double> estimate(std::uint64_t instant,
                                                std::size_t subcarrier) const;
    /// Dequantized estimates of one instant, ascending subcarrier.
    [[nodiscard]] std::vector<std::complex<double>> estimates(std::uint64_t instant) const;
};

[[nodiscard]] std::vector<std::uint8_t> encode_header(const TraceHeader& header);
[[nodiscard]] TraceHeader decode_header(std::span<const std::uint8_t> bytes);

/// Header + packed lane payload. samples.size() must equal
/// n_instants * rb_count * 12; mismatch raises ConfigError naming the
/// expected and actual counts. Deterministic bytes for identical input.
[[nodiscard]] std::vector<std::uint8_t> write_trace(const TraceHeader& header,
                                                    std::span<const Iq16> samples);

/// Exact inverse of write_trace. Throws FormatError on bad magic, unsupported
/// version, or size mismatch (with the expected byte count).
[[nodiscard]] ChannelTrace read_trace(std::span<const std::uint8_t> bytes);

void write_trace_file(const std::filesystem::path& path,
                      const TraceHeader& header,
                      std::span<const Iq16> samples);
[[nodiscard]] ChannelTrace read_trace_file(const std::filesystem::path& path);

/// CSV of the full magnitude surface: header line then
/// "instant,subcarrier,magnitude" rows, instant-major.
[[nodiscard]] std::string export_csv_surface(const ChannelTrace& trace);

/// CSV of one subcarrier: header line then
/// "instant,wall_time_s,real,imag,magnitude" rows.
/// Throws ConfigError when the subcarrier is out of range.
[[nodiscard]] std::string export_csv_subcarrier(const ChannelTrace& trace, int subcarrier);

}  // namespace chtr
