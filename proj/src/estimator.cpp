/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "chtr/estimator.hpp"

#include <cmath>
#include <string>

#include "chtr/errors.hpp"
#include "chtr/frame_grid.hpp"

namespace chtr {

namespace {

// Round half to even, independent of the floating-point environment.
double round_half_even(double v) {
    const double floor_v = std::floor(v);
    const double frac = v - floor_v;
    if (frac > 0.5) {
        return floor_v + 1.0;
    }
    if (frac < 0.5) {
        return floor_v;
    }
    return (std::fmod(floor_v, 2.0) == 0.0) ? floor_v : floor_v + 1.0;
}

std::int16_t saturate_component(double scaled, std::size_t& saturation_count) {
    const double rounded = round_half_even(scaled);
    if (rounded > 32767.0) {
        ++saturation_count;
        return 32767;
    }
    if (rounded < -32768.0) {
        ++saturation_count;
        return -32768;
    }
    return static_cast<std::int16_t>(rounded);
}

}  // namespace

EstimateBlock ls_estimate(std::span<const std::complex<double>> received,
                          const PilotSequence& pilots) {
    if (received.size() != pilots.values.size()) {
        throw ConfigError("received array length " + std::to_string(received.size()) +
                          " does not match pilot length " +
                          std::to_string(pilots.values.size()));
    }

    EstimateBlock block;
    block.slot_counter = pilots.slot_counter;
    block.estimates.reserve(received.size());
    for (std::size_t i = 0; i < received.size(); ++i) {
        block.estimates.push_back(received[i] * std::conj(pilots.values[i]));
    }
    return block;
}

QuantizedBlock quantize_block(std::span<const std::complex<double>> values,
                              int scale_exponent) {
    const double scale = std::ldexp(1.0, scale_exponent);
    QuantizedBlock out;
    out.samples.reserve(values.size());
    for (const auto& v : values) {
        Iq16 q;
        q.re = saturate_component(v.real() * scale, out.saturation_count);
        q.im = saturate_component(v.imag() * scale, out.saturation_count);
        out.samples.push_back(q);
    }
    return out;
}

QuantizedBlock quantize_block(const EstimateBlock& block, int scale_exponent) {
    return quantize_block(std::span<const std::complex<double>>(block.estimates),
                          scale_exponent);
}

std::complex<double> dequantize(Iq16 sample, int scale_exponent) noexcept {
    const double inv_scale = std::ldexp(1.0, -scale_exponent);
    return {sample.re * inv_scale, sample.im * inv_scale};
}

std::vector<std::uint8_t> pack_lanes(std::span<const Iq16> samples) {
    std::vector<std::uint8_t> bytes(packed_size_bytes(samples.size()), 0);
    std::size_t offset = 0;
    for (const auto& s : samples) {
        const auto re = static_cast<std::uint16_t>(s.re);
        const auto im = static_cast<std::uint16_t>(s.im);
        bytes[offset++] = static_cast<std::uint8_t>(re & 0xFF);
        bytes[offset++] = static_cast<std::uint8_t>(re >> 8);
        bytes[offset++] = static_cast<std::uint8_t>(im & 0xFF);
        bytes[offset++] = static_cast<std::uint8_t>(im >> 8);
    }
    return bytes;
}

std::vector<Iq16> unpack_lanes(std::span<const std::uint8_t> bytes, std::size_t n) {
    const std::size_t expected = packed_size_bytes(n);
    if (bytes.size() != expected) {
        throw FormatError("lane payload is " + std::to_string(bytes.size()) +
                              " bytes, expected " + std::to_string(expected) + " for " +
                              std::to_string(n) + " REs",
                          std::min(bytes.size(), expected));
    }

    std::vector<Iq16> samples;
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t offset = i * 4;
        const auto re = static_cast<std::uint16_t>(bytes[offset] |
                                                   (static_cast<std::uint16_t>(bytes[offset + 1]) << 8));
        const auto im = static_cast<std::uint16_t>(bytes[offset + 2] |
                                                   (static_cast<std::uint16_t>(bytes[offset + 3]) << 8));
        samples.push_back(Iq16{static_cast<std::int16_t>(re), static_cast<std::int16_t>(im)});
    }
    return samples;
}

double throughput_bits_per_s(int n_rb, double slot_duration_s) {
    if (n_rb < 1) {
        throw ConfigError("throughput needs at least one resource block");
    }
    if (!(slot_duration_s > 0.0)) {
        throw ConfigError("slot duration must be positive");
    }
    const double bits_per_slot = static_cast<double>(n_rb) * kSubcarriersPerRb * 2 * 16;
    return bits_per_slot / slot_duration_s;
}

}  // namespace chtr
