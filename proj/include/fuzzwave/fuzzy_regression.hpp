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
#ifndef FUZZWAVE_FUZZY_REGRESSION_HPP
#define FUZZWAVE_FUZZY_REGRESSION_HPP

#include <cmath>
#include <string>
#include <vector>

#include "fuzzwave/error.hpp"
#include "fuzzwave/simplex.hpp"
#include "fuzzwave/timeseries.hpp"

namespace fuzzwave {

/// Symmetric triangular fuzzy number: membership peaks at `center` and
/// vanishes at center +/- spread.
struct TriangularFuzzyNumber {
    double center = 0.0;
    double spread = 0.0;
};

/// Fuzzy line Y(t) = a0 + a1 * t fitted at threshold h.
struct FuzzyLinearModel {
    TriangularFuzzyNumber a0;
    TriangularFuzzyNumber a1;
    double h = 0.5;
    double objective = 0.0; ///< optimal a0.spread + a1.spread

    double center_at(double t) const noexcept { return a0.center + a1.center * t; }
    double half_width_at(double t) const noexcept {
        return (1.0 - h) * (a0.spread + a1.spread * std::abs(t));
    }
};

struct FuzzyInterval {
    double lower = 0.0;
    double center = 0.0;
    double upper = 0.0;
};

inline constexpr double default_threshold = 0.5;

inline void check_threshold(double h) {
    if (!(h >= 0.0 && h < 1.0))
        throw parameter_error("threshold h must lie in [0, 1), got " + std::to_string(h));
}

/// Possibilistic regression LP over variables (c0, c1, s0, s1):
///
///     minimize   s0 + s1
///     subject to c0 + c1 t_i - (1-h)(s0 + s1 |t_i|) <= Y_i
///                c0 + c1 t_i + (1-h)(s0 + s1 |t_i|) >= Y_i
///
/// with c0, c1 free and s0, s1 >= 0. Rows come in (lower, upper) pairs per
/// observation, in time order.
inline LinearProgram build_lp(const TimeSeries& series, double h) {
    check_threshold(h);
    LinearProgram lp;
    lp.objective = {0.0, 0.0, 1.0, 1.0};
    lp.signs = {VarSign::free, VarSign::free, VarSign::nonnegative, VarSign::nonnegative};
    lp.rows.reserve(2 * series.size());
    const double w = 1.0 - h;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double t = static_cast<double>(series.time_at(i));
        const double y = series[i];
        lp.rows.push_back({{1.0, t, -w, -w * std::abs(t)}, Sense::less_equal, y});
        lp.rows.push_back({{1.0, t, w, w * std::abs(t)}, Sense::greater_equal, y});
    }
    return lp;
}

inline FuzzyLinearModel fit_fuzzy_line(const TimeSeries& series, double h = default_threshold) {
    const LpResult r = solve_lp(build_lp(series, h));
    if (r.status != LpStatus::optimal)
        throw solver_error(std::string("fuzzy regression LP is ") + to_string(r.status));
    FuzzyLinearModel m;
    m.a0 = {r.x[0], r.x[2]};
    m.a1 = {r.x[1], r.x[3]};
    m.h = h;
    m.objective = m.a0.spread + m.a1.spread;
    return m;
}

inline FuzzyInterval evaluate_band(const FuzzyLinearModel& model, double t) noexcept {
    const double c = model.center_at(t);
    const double w = model.half_width_at(t);
    return {c - w, c, c + w};
}

/// Band evaluated at every time index of `series`.
struct BandSeries {
    std::vector<double> lower;
    std::vector<double> center;
    std::vector<double> upper;
};

inline BandSeries evaluate_bands(const FuzzyLinearModel& model, const TimeSeries& series) {
    BandSeries out;
    out.lower.reserve(series.size());
    out.center.reserve(series.size());
    out.upper.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        auto b = evaluate_band(model, static_cast<double>(series.time_at(i)));
        out.lower.push_back(b.lower);
        out.center.push_back(b.center);
        out.upper.push_back(b.upper);
    }
    return out;
}

} // namespace fuzzwave

#endif // FUZZWAVE_FUZZY_REGRESSION_HPP
