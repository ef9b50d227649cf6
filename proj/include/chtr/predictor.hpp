/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chtr/trace_io.hpp"

namespace chtr {

/// Z-scored series with the population statistics needed to invert the
/// transform (test spans are normalized with training statistics).
struct NormalizedSeries {
    std::vector<double> values;
    double mean = 0.0;
    double std_dev = 1.0;
};

/// (x - mean) / std using population statistics.
/// Throws NumericalError for a constant series, ConfigError for length < 2.
[[nodiscard]] NormalizedSeries zscore(std::span<const double> series);

/// Inverse of zscore within floating-point rounding.
[[nodiscard]] std::vector<double> denormalize(const NormalizedSeries& series);

/// One-step-ahead linear autoregressive model on a normalized series:
/// x_t ~ sum_i coefficients[i] * x_{t-1-i}.
struct ArModel {
    int order = 0;
    std::vector<double> coefficients;
    /// Theoretical one-step error variance from the Levinson-Durbin recursion.
    double training_mse = 0.0;
};

/// Fits by Levinson-Durbin on the biased empirical autocorrelation.
/// Requires train length > 10 * order; throws NumericalError when the
/// recursion degenerates.
[[nodiscard]] ArModel fit_ar(std::span<const double> normalized_train, int order);
[[nodiscard]] ArModel fit_ar(const NormalizedSeries& train, int order);

/// horizon predictions by iterated one-step prediction.
/// Throws ConfigError when history is shorter than the model order.
[[nodiscard]] std::vector<double> predict(const ArModel& model,
                                          std::span<const double> history,
                                          int horizon);

enum class Feature : std::uint8_t {
    kEnvelope = 0,
    kRealPart = 1,
};

/// Pluggable one-step-family predictor: fit on the normalized training span,
/// then forecast 1..horizon values past the given history.
class Predictor {
  public:
    virtual ~Predictor() = default;
    virtual void fit(std::span<const double> normalized_train) = 0;
    [[nodiscard]] virtual std::vector<double> forecast(std::span<const double> history,
                                                       int horizon) const = 0;
    [[nodiscard]] virtual std::string name() const = 0;
};

/// Built-in AR baseline.
class ArPredictor final : public Predictor {
  public:
    explicit ArPredictor(int order);
    void fit(std::span<const double> normalized_train) override;
    [[nodiscard]] std::vector<double> forecast(std::span<const double> history,
                                               int horizon) const override;
    [[nodiscard]] std::string name() const override;
    [[nodiscard]] const ArModel& model() const { return model_; }

  private:
    int order_;
    ArModel model_;
};

struct PredictionReport {
    int horizon = 1;
    int order = 0;
    double split = 0.7;
    /// Mean squared prediction error on the normalized scale, test span only.
    double mse = 0.0;
    std::size_t n_test = 0;
    double norm_mean = 0.0;
    double norm_std = 1.0;
    Feature feature = Feature::kEnvelope;
    int subcarrier = 0;
    std::string predictor = "ar";
};

/// Report plus the per-test-instant actual/predicted pairs (normalized scale)
/// for plotting.
struct Evaluation {
    PredictionReport report;
    std::vector<std::uint64_t> instants;
    std::vector<double> actual;
    std::vector<double> predicted;
};

/// Key=value rendering of a report, one pair per line.
[[nodiscard]] std::string format_report(const PredictionReport& report);
[[nodiscard]] std::string evaluation_csv(const Evaluation& evaluation);

/// Per-instant series of |h| or Re(h) at one subcarrier, dequantized.
[[nodiscard]] std::vector<double> extract_feature_series(const ChannelTrace& trace,
                                                         Feature feature,
                                                         int subcarrier);

/// Splits the raw series at floor(split * n), z-scores with training
/// statistics only, fits the predictor on the training span and measures the
/// horizon-step prediction MSE across the test span.
[[nodiscard]] Evaluation evaluate_series(std::span<const double> raw_series,
                                         Predictor& predictor,
                                         int horizon,
                                         double split);

/// Trace-level entry point using the built-in AR baseline.
[[nodiscard]] Evaluation evaluate(const ChannelTrace& trace,
                                  Feature feature,
                                  int subcarrier,
                                  int order,
                                  int horizon,
                                  double split);

/// Minimum one-step MSE of the optimal linear predictor for the normalized
/// noisy Jakes process, from the theoretical autocorrelation via a direct
/// dense solve of the Wiener-Hopf equations (deliberately not
/// Levinson-Durbin, so it is an independent check on fit_ar).
/// Throws NumericalError when the autocorrelation matrix is singular.
[[nodiscard]] double wiener_oracle(double doppler_hz,
                                   double sample_interval_s,
                                   int order,
                                   double snr_db);

}  // namespace chtr
