/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chtr {

/// Base class for all library errors. The CLI maps the subclasses to its
/// exit-code contract: ConfigError -> 2, FormatError -> 3, NumericalError -> 4.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Rejected input: bad configuration value, out-of-range argument,
/// violated precondition.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Malformed or truncated trace data. Carries the byte offset at which the
/// problem was detected when one is known.
class FormatError : public Error {
  public:
    explicit FormatError(const std::string& what) : Error(what), offset_(0), has_offset_(false) {}

    FormatError(const std::string& what, std::size_t byte_offset)
        : Error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset),
          has_offset_(true) {}

    [[nodiscard]] bool has_byte_offset() const noexcept { return has_offset_; }
    [[nodiscard]] std::size_t byte_offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
    bool has_offset_;
};

/// Degenerate or ill-conditioned numerical input (zero-variance series,
/// singular autocorrelation matrix, ...).
class NumericalError : public Error {
  public:
    using Error::Error;
};

}  // namespace chtr
