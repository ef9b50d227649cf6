/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "chtr/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "chtr/errors.hpp"

namespace chtr {

namespace {

void append_value(std::string& out, double v, const char* fmt = "%.12g") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, v);
    out += buf;
}

// Biased empirical autocorrelation r(0..max_lag); the 1/n normalization keeps
// the implied Toeplitz matrix positive semidefinite.
std::vector<double> empirical_autocorr(std::span<const double> x, int max_lag) {
    const auto n = x.size();
    std::vector<double> r(static_cast<std::size_t>(max_lag) + 1, 0.0);
    for (int k = 0; k <= max_lag; ++k) {
        double acc = 0.0;
        for (std::size_t t = 0; t + static_cast<std::size_t>(k) < n; ++t) {
            acc += x[t] * x[t + static_cast<std::size_t>(k)];
        }
        r[static_cast<std::size_t>(k)] = acc / static_cast<double>(n);
    }
    return r;
}

// Gaussian elimination with partial pivoting; deliberately the plain direct
// method so the Wiener oracle shares no code path with Levinson-Durbin.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    double max_entry = 0.0;
    for (const auto& row : a) {
        for (double v : row) {
            max_entry = std::max(max_entry, std::abs(v));
        }
    }
    const double pivot_floor = std::max(max_entry, 1.0) * 1e-13;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) {
                pivot = row;
            }
        }
        if (std::abs(a[pivot][col]) < pivot_floor) {
            throw NumericalError("autocorrelation matrix is singular");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
            }
            b[row] -= factor * b[col];
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t row = n; row-- > 0;) {
        double acc = b[row];
        for (std::size_t j = row + 1; j < n; ++j) {
            acc -= a[row][j] * x[j];
        }
        x[row] = acc / a[row][row];
    }
    return x;
}

const char* feature_name(Feature feature) {
    return feature == Feature::kEnvelope ? "envelope" : "real_part";
}

}  // namespace

NormalizedSeries zscore(std::span<const double> series) {
    if (series.size() < 2) {
        throw ConfigError("z-score needs at least two samples");
    }

    // Exact constancy check; summation rounding would otherwise leave a
    // vanishing-but-nonzero variance for a constant input.
    const auto [min_it, max_it] = std::minmax_element(series.begin(), series.end());
    if (*min_it == *max_it) {
        throw NumericalError("series is constant; z-score normalization is degenerate");
    }

    double mean = 0.0;
    for (double v : series) {
        mean += v;
    }
    mean /= static_cast<double>(series.size());

    double var = 0.0;
    for (double v : series) {
        var += (v - mean) * (v - mean);
    }
    var /= static_cast<double>(series.size());

    if (var <= 0.0) {
        throw NumericalError("series is constant; z-score normalization is degenerate");
    }

    NormalizedSeries out;
    out.mean = mean;
    out.std_dev = std::sqrt(var);
    out.values.reserve(series.size());
    for (double v : series) {
        out.values.push_back((v - mean) / out.std_dev);
    }
    return out;
}

std::vector<double> denormalize(const NormalizedSeries& series) {
    std::vector<double> out;
    out.reserve(series.values.size());
    for (double v : series.values) {
        out.push_back(v * series.std_dev + series.mean);
    }
    return out;
}

ArModel fit_ar(std::span<const double> normalized_train, int order) {
    if (order < 1) {
        throw ConfigError("AR order must be at least 1");
    }
    if (normalized_train.size() <= static_cast<std::size_t>(10 * order)) {
        throw ConfigError("AR(" + std::to_string(order) + ") needs more than " +
                          std::to_string(10 * order) + " training samples, got " +
                          std::to_string(normalized_train.size()));
    }

    const auto r = empirical_autocorr(normalized_train, order);
    if (!(r[0] > 0.0)) {
        throw NumericalError("training span has no energy");
    }

    // Levinson-Durbin on the Toeplitz normal equations.
    std::vector<double> a(static_cast<std::size_t>(order), 0.0);
    double error = r[0];
    for (int m = 1; m <= order; ++m) {
        double acc = r[static_cast<std::size_t>(m)];
        for (int i = 1; i < m; ++i) {
            acc -= a[static_cast<std::size_t>(i - 1)] * r[static_cast<std::size_t>(m - i)];
        }
        const double reflection = acc / error;

        std::vector<double> next(a);
        next[static_cast<std::size_t>(m - 1)] = reflection;
        for (int i = 1; i < m; ++i) {
            next[static_cast<std::size_t>(i - 1)] =
                a[static_cast<std::size_t>(i - 1)] -
                reflection * a[static_cast<std::size_t>(m - 1 - i)];
        }
        a = std::move(next);

        error *= (1.0 - reflection * reflection);
        if (!(error > 0.0) || !std::isfinite(error)) {
            throw NumericalError("degenerate autocorrelation at AR stage " + std::to_string(m));
        }
    }

    ArModel model;
    model.order = order;
    model.coefficients = std::move(a);
    model.training_mse = error;
    return model;
}

ArModel fit_ar(const NormalizedSeries& train, int order) {
    return fit_ar(std::span<const double>(train.values), order);
}

std::vector<double> predict(const ArModel& model,
                            std::span<const double> history,
                            int horizon) {
    if (horizon < 1) {
        throw ConfigError("prediction horizon must be at least 1");
    }
    const auto order = static_cast<std::size_t>(model.order);
    if (history.size() < order) {
        throw ConfigError("history of " + std::to_string(history.size()) +
                          " samples is shorter than the AR order " +
                          std::to_string(model.order));
    }

    // Working window of the most recent `order` values, newest first.
    std::vector<double> window(order);
    for (std::size_t i = 0; i < order; ++i) {
        window[i] = history[history.size() - 1 - i];
    }

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(horizon));
    for (int step = 0; step < horizon; ++step) {
        double value = 0.0;
        for (std::size_t i = 0; i < order; ++i) {
            value += model.coefficients[i] * window[i];
        }
        out.push_back(value);
        std::rotate(window.rbegin(), window.rbegin() + 1, window.rend());
        window[0] = value;
    }
    return out;
}

ArPredictor::ArPredictor(int order) : order_(order) {
    if (order < 1) {
        throw ConfigError("AR order must be at least 1");
    }
}

void ArPredictor::fit(std::span<const double> normalized_train) {
    model_ = fit_ar(normalized_train, order_);
}

std::vector<double> ArPredictor::forecast(std::span<const double> history, int horizon) const {
    return predict(model_, history, horizon);
}

std::string ArPredictor::name() const {
    return "ar(" + std::to_string(order_) + ")";
}

std::string format_report(const PredictionReport& report) {
    std::string out;
    out += "horizon=" + std::to_string(report.horizon) + "\n";
    out += "order=" + std::to_string(report.order) + "\n";
    out += "split=";
    append_value(out, report.split, "%g");
    out += "\nsigma2=";
    append_value(out, report.mse);
    out += "\nn_test=" + std::to_string(report.n_test) + "\n";
    out += "norm_mean=";
    append_value(out, report.norm_mean);
    out += "\nnorm_std=";
    append_value(out, report.norm_std);
    out += "\nfeature=";
    out += feature_name(report.feature);
    out += "\nsubcarrier=" + std::to_string(report.subcarrier) + "\n";
    out += "predictor=" + report.predictor + "\n";
    return out;
}

std::string evaluation_csv(const Evaluation& evaluation) {
    std::string out = "instant,actual,predicted\n";
    for (std::size_t i = 0; i < evaluation.instants.size(); ++i) {
        out += std::to_string(evaluation.instants[i]);
        out += ',';
        append_value(out, evaluation.actual[i]);
        out += ',';
        append_value(out, evaluation.predicted[i]);
        out += '\n';
    }
    return out;
}

std::vector<double> extract_feature_series(const ChannelTrace& trace,
                                           Feature feature,
                                           int subcarrier) {
    const std::size_t n_sc = trace.header.n_subcarriers();
    if (subcarrier < 0 || static_cast<std::size_t>(subcarrier) >= n_sc) {
        throw ConfigError("subcarrier " + std::to_string(subcarrier) + " out of range (valid: 0.." +
                          std::to_string(n_sc - 1) + ")");
    }

    std::vector<double> series;
    series.reserve(trace.header.n_instants);
    for (std::uint64_t t = 0; t < trace.header.n_instants; ++t) {
        const auto value = trace.estimate(t, static_cast<std::size_t>(subcarrier));
        series.push_back(feature == Feature::kEnvelope ? std::abs(value) : value.real());
    }
    return series;
}

Evaluation evaluate_series(std::span<const double> raw_series,
                           Predictor& predictor,
                           int horizon,
                           double split) {
    if (!(split > 0.0 && split < 1.0)) {
        throw ConfigError("split must lie strictly between 0 and 1");
    }
    if (horizon < 1) {
        throw ConfigError("prediction horizon must be at least 1");
    }

    const std::size_t n = raw_series.size();
    const auto n_train = static_cast<std::size_t>(split * static_cast<double>(n));
    if (n_train < 2 || n_train >= n) {
        throw ConfigError("split " + std::to_string(split) + " leaves no usable train/test span");
    }

    // Training statistics only; the test span is normalized with them.
    const NormalizedSeries train = zscore(raw_series.subspan(0, n_train));
    std::vector<double> normalized;
    normalized.reserve(n);
    for (double v : raw_series) {
        normalized.push_back((v - train.mean) / train.std_dev);
    }

    predictor.fit(std::span<const double>(normalized).subspan(0, n_train));

    Evaluation evaluation;
    evaluation.report.horizon = horizon;
    evaluation.report.split = split;
    evaluation.report.norm_mean = train.mean;
    evaluation.report.norm_std = train.std_dev;
    evaluation.report.predictor = predictor.name();

    double acc = 0.0;
    const auto h = static_cast<std::size_t>(horizon);
    for (std::size_t t = n_train; t < n; ++t) {
        if (t < h) {
            continue;
        }
        const auto history = std::span<const double>(normalized).subspan(0, t - h + 1);
        const double predicted = predictor.forecast(history, horizon).back();
        const double err = predicted - normalized[t];
        acc += err * err;
        evaluation.instants.push_back(t);
        evaluation.actual.push_back(normalized[t]);
        evaluation.predicted.push_back(predicted);
    }
    if (evaluation.instants.empty()) {
        throw ConfigError("test span is empty");
    }

    evaluation.report.n_test = evaluation.instants.size();
    evaluation.report.mse = acc / static_cast<double>(evaluation.report.n_test);
    return evaluation;
}

Evaluation evaluate(const ChannelTrace& trace,
                    Feature feature,
                    int subcarrier,
                    int order,
                    int horizon,
                    double split) {
    if (order < 1) {
        throw ConfigError("AR order must be at least 1");
    }
    if (trace.header.n_instants < static_cast<std::uint64_t>(2 * order + 20)) {
        throw ConfigError("trace of " + std::to_string(trace.header.n_instants) +
                          " instants is too short; need at least " +
                          std::to_string(2 * order + 20));
    }

    const auto series = extract_feature_series(trace, feature, subcarrier);
    ArPredictor predictor(order);
    Evaluation evaluation = evaluate_series(series, predictor, horizon, split);
    evaluation.report.order = order;
    evaluation.report.feature = feature;
    evaluation.report.subcarrier = subcarrier;
    return evaluation;
}

double wiener_oracle(double doppler_hz,
                     double sample_interval_s,
                     int order,
                     double snr_db) {
    if (order < 1) {
        throw ConfigError("Wiener oracle order must be at least 1");
    }
    if (doppler_hz < 0.0 || sample_interval_s <= 0.0) {
        throw ConfigError("Wiener oracle needs doppler_hz >= 0 and a positive sample interval");
    }

    // Normalized autocorrelation of the unit-variance noisy estimate process:
    // R(k) = (J0(2 pi fD tau k) + sigma_n^2 [k == 0]) / (1 + sigma_n^2).
    const double sigma2 = noise_variance(snr_db);
    const auto corr = [&](int k) {
        const double num = theoretical_autocorr(doppler_hz,
                                                static_cast<double>(k) * sample_interval_s) +
                           (k == 0 ? sigma2 : 0.0);
        return num / (1.0 + sigma2);
    };

    const auto p = static_cast<std::size_t>(order);
    std::vector<std::vector<double>> toeplitz(p, std::vector<double>(p));
    std::vector<double> rhs(p);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            toeplitz[i][j] = corr(static_cast<int>(i > j ? i - j : j - i));
        }
        rhs[i] = corr(static_cast<int>(i) + 1);
    }

    const auto weights = solve_dense(std::move(toeplitz), rhs);
    double mse = 1.0;
    for (std::size_t i = 0; i < p; ++i) {
        mse -= weights[i] * rhs[i];
    }
    // Guard against cancellation pushing an exactly-predictable process below zero.
    return std::max(mse, 0.0);
}

}  // namespace chtr
