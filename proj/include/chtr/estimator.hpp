/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "chtr/pilot_gen.hpp"

namespace chtr {

/// Per-pilot-RE least-squares channel estimates for one instant, ordered by
/// ascending subcarrier index.
struct EstimateBlock {
    std::uint64_t slot_counter = 0;
    std::vector<std::complex<double>> estimates;
};

/// Signed 16-bit fixed-point I/Q pair. The power-of-two scale factor is
/// shared per trace and lives in the trace header.
struct Iq16 {
    std::int16_t re = 0;
    std::int16_t im = 0;

    friend bool operator==(const Iq16&, const Iq16&) = default;
};

struct QuantizedBlock {
    std::vector<Iq16> samples;
    std::size_t saturation_count = 0;
};

/// 128-bit lane group: 4 REs, each real word then imaginary word,
/// little-endian 16-bit words, ascending subcarrier order.
inline constexpr std::size_t kResPerLaneGroup = 4;
inline constexpr std::size_t kLaneGroupBytes = 16;

[[nodiscard]] constexpr std::size_t lane_group_count(std::size_t n_samples) noexcept {
    return (n_samples + kResPerLaneGroup - 1) / kResPerLaneGroup;
}
[[nodiscard]] constexpr std::size_t packed_size_bytes(std::size_t n_samples) noexcept {
    return lane_group_count(n_samples) * kLaneGroupBytes;
}

/// h_i = y_i * conj(x_i). With unit-magnitude pilots this is the exact LS
/// solution of y = h * x. Throws ConfigError on length mismatch.
[[nodiscard]] EstimateBlock ls_estimate(std::span<const std::complex<double>> received,
                                        const PilotSequence& pilots);

/// Each component is round-half-to-even(value * 2^scale_exponent), saturated
/// to the int16 range. Saturation is silent but counted.
[[nodiscard]] QuantizedBlock quantize_block(std::span<const std::complex<double>> values,
                                            int scale_exponent);
[[nodiscard]] QuantizedBlock quantize_block(const EstimateBlock& block, int scale_exponent);

[[nodiscard]] std::complex<double> dequantize(Iq16 sample, int scale_exponent) noexcept;

/// Serializes REs into 128-bit lane groups; a trailing partial group is
/// zero-padded. unpack_lanes is the exact inverse and throws FormatError
/// (with byte offset) when the byte length does not match packed_size_bytes(n).
[[nodiscard]] std::vector<std::uint8_t> pack_lanes(std::span<const Iq16> samples);
[[nodiscard]] std::vector<Iq16> unpack_lanes(std::span<const std::uint8_t> bytes, std::size_t n);

/// Estimate stream rate: n_rb * 12 REs * 2 * 16 bit per slot.
[[nodiscard]] double throughput_bits_per_s(int n_rb, double slot_duration_s);

}  // namespace chtr
