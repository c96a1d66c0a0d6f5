/* Copyright 2026 The fuzzwave Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef FUZZWAVE_TIMESERIES_HPP
#define FUZZWAVE_TIMESERIES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzwave/error.hpp"

namespace fuzzwave {

/// Uniformly sampled sequence of finite observations.
///
/// Storage is 0-based, but element i carries the time index
/// `start_index() + i`, so with the default start the first sample sits at t = 1.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values, std::string label = {}, long start_index = 1)
        : values_(std::move(values)), label_(std::move(label)), start_index_(start_index) {
        if (values_.empty())
            throw insufficient_data_error("time series must contain at least one value");
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!std::isfinite(values_[i]))
                throw domain_error("non-finite value at index " + std::to_string(i + 1), i + 1);
        }
    }

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    const std::string& label() const noexcept { return label_; }
    long start_index() const noexcept { return start_index_; }
    long time_at(std::size_t i) const noexcept { return start_index_ + static_cast<long>(i); }

    /// Sub-series over 1-based positions [first, last], keeping absolute time indices.
    TimeSeries restrict(std::size_t first, std::size_t last) const {
        if (first < 1 || last < first || last > values_.size())
            throw shape_error("invalid restriction [" + std::to_string(first) + ", " +
                              std::to_string(last) + "] of a series of length " +
                              std::to_string(values_.size()));
        std::vector<double> sub(values_.begin() + static_cast<std::ptrdiff_t>(first - 1),
                                values_.begin() + static_cast<std::ptrdiff_t>(last));
        return TimeSeries(std::move(sub), label_, time_at(first - 1));
    }

    TimeSeries with_label(std::string label) const {
        return TimeSeries(values_, std::move(label), start_index_);
    }

private:
    std::vector<double> values_;
    std::string label_;
    long start_index_;
};

/// Descriptive statistics. Moments use the population divisor N; kurtosis is
/// non-excess (3 for a normal law). Skewness and kurtosis are empty when the
/// series is constant.
struct SeriesStats {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::optional<double> kurtosis;
    std::optional<double> skewness;
};

/// Element-wise natural logarithm.
inline TimeSeries log_transform(const TimeSeries& series) {
    std::vector<double> out;
    out.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        double v = series[i];
        if (!(v > 0.0))
            throw domain_error("log transform needs positive values; value " + std::to_string(v) +
                                   " at index " + std::to_string(i + 1),
                               i + 1);
        out.push_back(std::log(v));
    }
    return TimeSeries(std::move(out), series.label(), series.start_index());
}

inline SeriesStats describe(std::span<const double> values) {
    if (values.size() < 2)
        throw insufficient_data_error("describe needs at least 2 observations, got " +
                                      std::to_string(values.size()));

    // Two passes: the mean, then central sums about it. The first-order
    // residual sum corrects the mean for rounding (corrected two-pass).
    const double n = static_cast<double>(values.size());
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    double sum = 0.0;
    for (double x : values)
        sum += x;
    double mean = sum / n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    if (lo == hi) {
        mean = lo;
    } else {
        double r = 0.0;
        for (double x : values)
            r += x - mean;
        mean += r / n;
        for (double x : values) {
            const double d = x - mean;
            const double d2 = d * d;
            m2 += d2;
            m3 += d2 * d;
            m4 += d2 * d2;
        }
    }

    SeriesStats s;
    s.n = values.size();
    s.mean = std::clamp(mean, lo, hi);
    s.variance = std::max(m2 / n, 0.0);
    s.min = lo;
    s.max = hi;
    if (m2 > 0.0) {
        s.skewness = std::sqrt(n) * m3 / std::pow(m2, 1.5);
        s.kurtosis = n * m4 / (m2 * m2);
    }
    return s;
}

inline SeriesStats describe(const TimeSeries& series) { return describe(series.values()); }

/// Mean squared error with divisor N.
inline double mse(std::span<const double> observed, std::span<const double> estimated) {
    if (observed.size() != estimated.size())
        throw shape_error("length mismatch: " + std::to_string(observed.size()) + " observed vs " +
                          std::to_string(estimated.size()) + " estimated");
    if (observed.empty())
        throw insufficient_data_error("mse of empty series");
    double sum = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double r = observed[i] - estimated[i];
        sum += r * r;
    }
    return sum / static_cast<double>(observed.size());
}

inline double mse(const TimeSeries& observed, const TimeSeries& estimated) {
    return mse(observed.values(), estimated.values());
}

inline double rmse(std::span<const double> observed, std::span<const double> estimated) {
    return std::sqrt(mse(observed, estimated));
}

inline double rmse(const TimeSeries& observed, const TimeSeries& estimated) {
    return rmse(observed.values(), estimated.values());
}

} // namespace fuzzwave

#endif // FUZZWAVE_TIMESERIES_HPP
