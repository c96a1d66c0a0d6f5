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
#ifndef FUZZWAVE_WAVELET_HPP
#define FUZZWAVE_WAVELET_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fuzzwave/error.hpp"
#include "fuzzwave/timeseries.hpp"

namespace fuzzwave {

namespace detail {

// Published Daubechies scaling filters (reconstruction low-pass ordering),
// indexed by number of vanishing moments.
inline std::vector<double> daubechies_lowpass(int order) {
    switch (order) {
        case 1:
            return {
                0.7071067811865476, 0.7071067811865476};
        case 2:
            return {
                0.48296291314453416, 0.8365163037378079, 0.2241438680420134, -0.12940952255126037};
        case 3:
            return {
                0.33267055295008263, 0.8068915093110925, 0.45987750211849154, -0.13501102001025458,
                -0.08544127388202666, 0.03522629188570953};
        case 4:
            return {
                0.2303778133088965, 0.7148465705529157, 0.6308807679298589, -0.027983769416859854,
                -0.18703481171909309, 0.030841381835560764, 0.0328830116668852, -0.010597401785069032};
        case 5:
            return {
                0.16010239797419293, 0.6038292697971896, 0.7243085284377729, 0.13842814590132074,
                -0.24229488706638203, -0.032244869584638375, 0.07757149384004572, -0.006241490212798274,
                -0.012580751999081999, 0.0033357252854737712};
        case 6:
            return {
                0.11154074335010947, 0.49462389039845306, 0.7511339080210954, 0.31525035170919763,
                -0.22626469396543983, -0.12976686756726194, 0.09750160558732304, 0.027522865530305727,
                -0.03158203931748603, 0.0005538422011614961, 0.004777257510945511, -0.0010773010853084796};
        case 7:
            return {
                0.07785205408500918, 0.3965393194819173, 0.7291320908462351, 0.4697822874051931,
                -0.14390600392856498, -0.22403618499387498, 0.07130921926683026, 0.08061260915108308,
                -0.03802993693501441, -0.01657454163066688, 0.01255099855609984, 0.0004295779729213665,
                -0.0018016407040474908, 0.00035371379997452024};
        case 8:
            return {
                0.05441584224310401, 0.31287159091429995, 0.6756307362972898, 0.5853546836542067,
                -0.015829105256349306, -0.2840155429615469, 0.0004724845739132828, 0.12874742662047847,
                -0.017369301001807547, -0.044088253930794755, 0.013981027917398282, 0.008746094047405777,
                -0.004870352993451574, -0.00039174037337694705, 0.0006754494064505693,
                -0.00011747678412476953};
        case 9:
            return {
                0.038077947363878345, 0.24383467461259034, 0.6048231236901112, 0.6572880780513005,
                0.13319738582500756, -0.2932737832791749, -0.09684078322297646, 0.14854074933810638,
                0.03072568147933338, -0.06763282906132997, 0.00025094711483145197, 0.022361662123679096,
                -0.004723204757751397, -0.00428150368246343, 0.0018476468830562265,
                0.00023038576352319597, -0.0002519631889427101, 3.93473203162716e-05};
        case 10:
            return {
                0.026670057900555554, 0.1881768000776915, 0.5272011889317256, 0.6884590394536035,
                0.2811723436605775, -0.24984642432731538, -0.19594627437737705, 0.12736934033579325,
                0.09305736460357235, -0.07139414716639708, -0.029457536821875813, 0.033212674059341,
                0.0036065535669561697, -0.010733175483330575, 0.001395351747052901, 0.001992405295185056,
                -0.0006858566949597116, -0.00011646685512928545, 9.358867032006959e-05,
                -1.3264202894521244e-05};
        default:
            throw parameter_error("Daubechies order must be in [1, 10], got " + std::to_string(order));
    }
}

} // namespace detail

/// Orthonormal Daubechies filter pair with `order` vanishing moments
/// (db4 has 8 taps). The high-pass filter is the quadrature mirror
/// g[n] = (-1)^n h[L-1-n].
class DaubechiesFilter {
public:
    explicit DaubechiesFilter(int order) : order_(order), lowpass_(detail::daubechies_lowpass(order)) {
        const std::size_t len = lowpass_.size();
        highpass_.resize(len);
        for (std::size_t n = 0; n < len; ++n)
            highpass_[n] = ((n % 2 == 0) ? 1.0 : -1.0) * lowpass_[len - 1 - n];
        check_orthonormal();
    }

    int order() const noexcept { return order_; }
    std::size_t length() const noexcept { return lowpass_.size(); }
    std::span<const double> lowpass() const noexcept { return lowpass_; }
    std::span<const double> highpass() const noexcept { return highpass_; }

private:
    void check_orthonormal() const {
        constexpr double tol = 1e-12;
        double sum_lo = 0.0, sum_hi = 0.0;
        for (std::size_t n = 0; n < length(); ++n) {
            sum_lo += lowpass_[n];
            sum_hi += highpass_[n];
        }
        if (std::abs(sum_lo - std::sqrt(2.0)) > tol || std::abs(sum_hi) > tol)
            throw structure_error("db" + std::to_string(order_) + " filter sums are off");
        for (std::size_t shift = 0; shift < length(); shift += 2) {
            double acc = 0.0;
            for (std::size_t n = 0; n + shift < length(); ++n)
                acc += lowpass_[n] * lowpass_[n + shift];
            if (std::abs(acc - (shift == 0 ? 1.0 : 0.0)) > tol)
                throw structure_error("db" + std::to_string(order_) + " filter is not orthonormal");
        }
    }

    int order_;
    std::vector<double> lowpass_;
    std::vector<double> highpass_;
};

enum class BoundaryMode { periodic };

/// Wavelet coefficient pyramid. details[j-1] holds level j (finest first);
/// with periodic handling level j has N / 2^j coefficients.
struct DWTCoefficients {
    std::vector<double> approximation;
    std::vector<std::vector<double>> details;
    std::size_t original_length = 0;
    BoundaryMode mode = BoundaryMode::periodic;

    int levels() const noexcept { return static_cast<int>(details.size()); }
};

/// What to do when N is not a multiple of 2^J.
enum class LengthPolicy {
    reject,
    truncate ///< drop trailing samples down to the largest multiple of 2^J
};

namespace detail {

inline void check_levels(std::size_t n, int levels) {
    if (levels < 1)
        throw level_error("decomposition level must be >= 1, got " + std::to_string(levels));
    if (levels >= 63 || (std::size_t{1} << levels) > n)
        throw level_error("level " + std::to_string(levels) + " is too deep for length " +
                          std::to_string(n));
    if (n % (std::size_t{1} << levels) != 0)
        throw level_error("length " + std::to_string(n) + " is not divisible by 2^" +
                          std::to_string(levels));
}

// Sample offset of the periodized filter bank. With it the transform equals
// circular convolution with the analysis filters (the reversed taps) sampled
// at 2k + L/2, i.e. the standard periodized DWT ("per" / "periodization").
inline std::ptrdiff_t alignment_offset(const DaubechiesFilter& f) {
    return 1 - static_cast<std::ptrdiff_t>(f.length() / 2);
}

inline std::size_t wrap(std::ptrdiff_t i, std::size_t m) {
    const auto mm = static_cast<std::ptrdiff_t>(m);
    return static_cast<std::size_t>(((i % mm) + mm) % mm);
}

// One analysis step: a[k] = sum_n h[n] x[(2k + n + offset) mod M], same for d with g.
inline void analysis_step(std::span<const double> x, const DaubechiesFilter& f,
                          std::vector<double>& approx, std::vector<double>& detail) {
    const std::size_t m = x.size();
    const std::size_t half = m / 2;
    const auto lo = f.lowpass();
    const auto hi = f.highpass();
    const std::ptrdiff_t offset = alignment_offset(f);
    approx.assign(half, 0.0);
    detail.assign(half, 0.0);
    for (std::size_t k = 0; k < half; ++k) {
        double a = 0.0, d = 0.0;
        for (std::size_t n = 0; n < lo.size(); ++n) {
            const double v = x[wrap(static_cast<std::ptrdiff_t>(2 * k + n) + offset, m)];
            a += lo[n] * v;
            d += hi[n] * v;
        }
        approx[k] = a;
        detail[k] = d;
    }
}

// Transpose of analysis_step; exact inverse because the periodized filter bank is orthonormal.
inline std::vector<double> synthesis_step(std::span<const double> approx, std::span<const double> detail,
                                          const DaubechiesFilter& f) {
    const std::size_t half = approx.size();
    const std::size_t m = 2 * half;
    const auto lo = f.lowpass();
    const auto hi = f.highpass();
    const std::ptrdiff_t offset = alignment_offset(f);
    std::vector<double> x(m, 0.0);
    for (std::size_t k = 0; k < half; ++k) {
        for (std::size_t n = 0; n < lo.size(); ++n)
            x[wrap(static_cast<std::ptrdiff_t>(2 * k + n) + offset, m)] += lo[n] * approx[k] + hi[n] * detail[k];
    }
    return x;
}

} // namespace detail

/// Pyramid algorithm with periodic extension. Requires N divisible by 2^levels.
inline DWTCoefficients dwt_forward(std::span<const double> x, const DaubechiesFilter& filter, int levels) {
    detail::check_levels(x.size(), levels);
    DWTCoefficients out;
    out.original_length = x.size();
    out.details.resize(static_cast<std::size_t>(levels));
    std::vector<double> current(x.begin(), x.end());
    std::vector<double> approx;
    for (int j = 0; j < levels; ++j) {
        detail::analysis_step(current, filter, approx, out.details[static_cast<std::size_t>(j)]);
        current.swap(approx);
    }
    out.approximation = std::move(current);
    return out;
}

inline DWTCoefficients dwt_forward(const TimeSeries& series, const DaubechiesFilter& filter, int levels) {
    return dwt_forward(series.values(), filter, levels);
}

inline TimeSeries dwt_inverse(const DWTCoefficients& coeffs, const DaubechiesFilter& filter) {
    const std::size_t levels = coeffs.details.size();
    if (levels == 0)
        throw structure_error("coefficient pyramid has no detail levels");
    if (levels >= 63 || coeffs.original_length % (std::size_t{1} << levels) != 0 ||
        coeffs.original_length == 0)
        throw structure_error("original length " + std::to_string(coeffs.original_length) +
                              " does not fit " + std::to_string(levels) + " levels");
    for (std::size_t j = 0; j < levels; ++j) {
        const std::size_t expected = coeffs.original_length >> (j + 1);
        if (coeffs.details[j].size() != expected)
            throw structure_error("level " + std::to_string(j + 1) + " has " +
                                  std::to_string(coeffs.details[j].size()) +
                                  " detail coefficients, expected " + std::to_string(expected));
    }
    if (coeffs.approximation.size() != coeffs.details.back().size())
        throw structure_error("approximation has " + std::to_string(coeffs.approximation.size()) +
                              " coefficients, expected " + std::to_string(coeffs.details.back().size()));

    std::vector<double> current = coeffs.approximation;
    for (std::size_t j = levels; j-- > 0;)
        current = detail::synthesis_step(current, coeffs.details[j], filter);
    return TimeSeries(std::move(current));
}

/// Additive multiresolution split S = A_J + D_1 + ... + D_J; every
/// component has the input's length and time indices.
struct MRADecomposition {
    TimeSeries approximation;
    std::vector<TimeSeries> details; ///< details[j-1] is D_j, D_1 finest
    int level = 0;

    /// D_j for 1-based j.
    const TimeSeries& detail(int j) const {
        if (j < 1 || j > level)
            throw level_error("detail level " + std::to_string(j) + " outside [1, " +
                              std::to_string(level) + "]");
        return details[static_cast<std::size_t>(j - 1)];
    }

    std::size_t size() const noexcept { return approximation.size(); }

    /// A_J + sum of details.
    std::vector<double> reconstruct() const {
        std::vector<double> sum(approximation.values().begin(), approximation.values().end());
        for (const auto& d : details)
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] += d[i];
        return sum;
    }
};

inline MRADecomposition mra_decompose(const TimeSeries& series, const DaubechiesFilter& filter, int levels,
                                      LengthPolicy policy = LengthPolicy::reject) {
    std::span<const double> x = series.values();
    if (policy == LengthPolicy::truncate && levels >= 1 && levels < 63) {
        const std::size_t block = std::size_t{1} << levels;
        const std::size_t keep = (x.size() / block) * block;
        if (keep == 0)
            throw level_error("level " + std::to_string(levels) + " is too deep for length " +
                              std::to_string(x.size()));
        x = x.first(keep);
    }
    const DWTCoefficients coeffs = dwt_forward(x, filter, levels);

    auto component = [&](auto&& select, const std::string& name) {
        DWTCoefficients c;
        c.original_length = coeffs.original_length;
        c.mode = coeffs.mode;
        c.approximation.assign(coeffs.approximation.size(), 0.0);
        c.details.reserve(coeffs.details.size());
        for (const auto& d : coeffs.details)
            c.details.emplace_back(d.size(), 0.0);
        select(c);
        const TimeSeries rec = dwt_inverse(c, filter);
        return TimeSeries(std::vector<double>(rec.values().begin(), rec.values().end()), name,
                          series.start_index());
    };

    TimeSeries approx = component([&](DWTCoefficients& c) { c.approximation = coeffs.approximation; },
                                  "A" + std::to_string(levels));
    std::vector<TimeSeries> details;
    details.reserve(static_cast<std::size_t>(levels));
    for (int j = 1; j <= levels; ++j) {
        const auto idx = static_cast<std::size_t>(j - 1);
        details.push_back(component([&](DWTCoefficients& c) { c.details[idx] = coeffs.details[idx]; },
                                    "D" + std::to_string(j)));
    }
    return MRADecomposition{std::move(approx), std::move(details), levels};
}

} // namespace fuzzwave

#endif // FUZZWAVE_WAVELET_HPP
