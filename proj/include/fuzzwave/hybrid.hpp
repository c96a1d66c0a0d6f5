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
#ifndef FUZZWAVE_HYBRID_HPP
#define FUZZWAVE_HYBRID_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzwave/error.hpp"
#include "fuzzwave/fuzzy_regression.hpp"
#include "fuzzwave/timeseries.hpp"
#include "fuzzwave/wavelet.hpp"

namespace fuzzwave {

/// 1-based positions of the strict local extrema of `x`.
///
/// A point is an extremum when the nearest nonzero differences on either side
/// have opposite signs. A plateau between such differences contributes its
/// midpoint, rounding half down. Monotone runs and edge plateaus contribute nothing.
inline std::vector<std::size_t> find_extrema(std::span<const double> x) {
    std::vector<std::size_t> out;
    if (x.size() < 3)
        return out;
    int prev_sign = 0;
    std::size_t prev_step = 0; // last k with x[k+1] != x[k]
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        const double d = x[k + 1] - x[k];
        const int s = (d > 0.0) - (d < 0.0);
        if (s == 0)
            continue;
        if (prev_sign != 0 && s != prev_sign) {
            // Plateau occupies 0-based points prev_step + 1 .. k.
            out.push_back((prev_step + 1 + k) / 2 + 1);
        }
        prev_sign = s;
        prev_step = k;
    }
    return out;
}

inline std::vector<std::size_t> find_extrema(const TimeSeries& detail) { return find_extrema(detail.values()); }

/// Partition of 1..n into consecutive closed fitting intervals [b_k, b_{k+1}].
///
/// Neighbouring intervals share their boundary point. For the regrouped
/// estimate the shared point belongs to the left interval: interval 0 owns
/// [b_0, b_1] and interval k > 0 owns (b_k, b_{k+1}].
class Segmentation {
public:
    Segmentation(std::vector<std::size_t> boundaries, int source_level = 0)
        : boundaries_(std::move(boundaries)), source_level_(source_level) {
        if (boundaries_.size() < 2 || boundaries_.front() != 1)
            throw parameter_error("segmentation must start at 1 and have at least one segment");
        for (std::size_t i = 1; i < boundaries_.size(); ++i)
            if (boundaries_[i] <= boundaries_[i - 1])
                throw parameter_error("segmentation boundaries must be strictly increasing");
    }

    const std::vector<std::size_t>& boundaries() const noexcept { return boundaries_; }
    int source_level() const noexcept { return source_level_; }
    std::size_t length() const noexcept { return boundaries_.back(); }
    std::size_t segment_count() const noexcept { return boundaries_.size() - 1; }

    /// Closed 1-based fitting interval of segment k.
    std::pair<std::size_t, std::size_t> fit_range(std::size_t k) const {
        return {boundaries_.at(k), boundaries_.at(k + 1)};
    }

    /// 1-based positions whose regrouped estimate comes from segment k.
    std::pair<std::size_t, std::size_t> owned_range(std::size_t k) const {
        return {k == 0 ? boundaries_.at(0) : boundaries_.at(k) + 1, boundaries_.at(k + 1)};
    }

private:
    std::vector<std::size_t> boundaries_;
    int source_level_;
};

/// Boundaries {1} + extrema + {n}. An extremum adjacent to the previously
/// kept extremum is dropped; the endpoints 1 and n are always kept.
inline Segmentation segment_from_extrema(std::span<const std::size_t> extrema, std::size_t n,
                                         int source_level = 0) {
    if (n < 2)
        throw insufficient_data_error("segmentation needs at least 2 points, got " + std::to_string(n));
    std::vector<std::size_t> b{1};
    std::size_t last_kept = 0;
    for (std::size_t i = 0; i < extrema.size(); ++i) {
        const std::size_t e = extrema[i];
        if (e <= 1 || e >= n)
            throw parameter_error("extremum " + std::to_string(e) + " outside (1, " + std::to_string(n) + ")");
        if (i > 0 && e <= extrema[i - 1])
            throw parameter_error("extrema must be sorted strictly ascending");
        if (last_kept != 0 && e - last_kept < 2)
            continue;
        b.push_back(e);
        last_kept = e;
    }
    b.push_back(n);
    return Segmentation(std::move(b), source_level);
}

struct HybridEstimate {
    Segmentation segmentation;
    std::vector<FuzzyLinearModel> segment_models;
    TimeSeries center;
    TimeSeries lower;
    TimeSeries upper;
    int level = 0;
    double h = default_threshold;

    /// Sum of the per-segment optimal spreads.
    double total_objective() const noexcept {
        double s = 0.0;
        for (const auto& m : segment_models)
            s += m.objective;
        return s;
    }
};

/// Fits a fuzzy line to the restriction of `series` on every segment and
/// regroups the bands into full-length series. Time indices stay absolute.
inline HybridEstimate estimate_on_segmentation(const TimeSeries& series, const Segmentation& seg,
                                               double h = default_threshold) {
    check_threshold(h);
    const std::size_t n = series.size();
    if (seg.length() != n)
        throw shape_error("segmentation covers " + std::to_string(seg.length()) + " points, series has " +
                          std::to_string(n));

    std::vector<FuzzyLinearModel> models;
    models.reserve(seg.segment_count());
    std::vector<double> lower(n), center(n), upper(n);
    for (std::size_t k = 0; k < seg.segment_count(); ++k) {
        const auto [first, last] = seg.fit_range(k);
        models.push_back(fit_fuzzy_line(series.restrict(first, last), h));
        const auto [own_first, own_last] = seg.owned_range(k);
        for (std::size_t p = own_first; p <= own_last; ++p) {
            const auto band = evaluate_band(models.back(), static_cast<double>(series.time_at(p - 1)));
            lower[p - 1] = band.lower;
            center[p - 1] = band.center;
            upper[p - 1] = band.upper;
        }
    }
    const std::string suffix =
        seg.source_level() > 0 ? " (D" + std::to_string(seg.source_level()) + ")" : std::string{};
    return HybridEstimate{seg,
                          std::move(models),
                          TimeSeries(std::move(center), "center" + suffix, series.start_index()),
                          TimeSeries(std::move(lower), "lower" + suffix, series.start_index()),
                          TimeSeries(std::move(upper), "upper" + suffix, series.start_index()),
                          seg.source_level(),
                          h};
}

/// Segments time at the extrema of D_level and fits the original series piecewise.
inline HybridEstimate estimate_hybrid(const TimeSeries& series, const MRADecomposition& decomposition, int level,
                                      double h = default_threshold) {
    if (series.size() != decomposition.size())
        throw shape_error("series length " + std::to_string(series.size()) +
                          " does not match decomposition length " + std::to_string(decomposition.size()));
    const auto extrema = find_extrema(decomposition.detail(level));
    return estimate_on_segmentation(series, segment_from_extrema(extrema, series.size(), level), h);
}

struct ErrorRow {
    std::string model;
    int level = 0; ///< 0 for the global fuzzy regression
    double mse = 0.0;
    double rmse = 0.0;
};

struct ErrorReport {
    std::vector<ErrorRow> rows; ///< global fit, then D_J .. D_1
    FuzzyLinearModel global_model;
    BandSeries global_band;
    std::vector<HybridEstimate> hybrids; ///< same order as rows[1..]
};

inline ErrorReport error_report(const TimeSeries& series, const MRADecomposition& decomposition,
                                double h = default_threshold) {
    ErrorReport report;
    report.global_model = fit_fuzzy_line(series, h);
    report.global_band = evaluate_bands(report.global_model, series);
    const double global_mse = mse(series.values(), report.global_band.center);
    report.rows.push_back({"Fuzzy Regression", 0, global_mse, std::sqrt(global_mse)});

    for (int level = decomposition.level; level >= 1; --level) {
        report.hybrids.push_back(estimate_hybrid(series, decomposition, level, h));
        const double e = mse(series, report.hybrids.back().center);
        report.rows.push_back({"Hybrid with D" + std::to_string(level), level, e, std::sqrt(e)});
    }
    return report;
}

} // namespace fuzzwave

#endif // FUZZWAVE_HYBRID_HPP
