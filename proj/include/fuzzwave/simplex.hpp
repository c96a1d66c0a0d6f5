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
#ifndef FUZZWAVE_SIMPLEX_HPP
#define FUZZWAVE_SIMPLEX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "fuzzwave/error.hpp"

namespace fuzzwave {

enum class Sense { less_equal, greater_equal, equal };

enum class VarSign { nonnegative, free };

struct Constraint {
    std::vector<double> coeffs;
    Sense sense = Sense::less_equal;
    double rhs = 0.0;
};

/// minimize objective . x subject to rows, with per-variable sign restrictions.
struct LinearProgram {
    std::vector<double> objective;
    std::vector<Constraint> rows;
    std::vector<VarSign> signs;

    std::size_t num_variables() const noexcept { return objective.size(); }
    std::size_t num_constraints() const noexcept { return rows.size(); }

    void validate() const {
        if (objective.empty())
            throw parameter_error("linear program has no variables");
        if (signs.size() != objective.size())
            throw shape_error("sign restriction count does not match variable count");
        for (double c : objective)
            if (!std::isfinite(c))
                throw parameter_error("non-finite objective coefficient");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].coeffs.size() != objective.size())
                throw shape_error("constraint " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].coeffs.size()) + " coefficients, expected " +
                                  std::to_string(objective.size()));
            if (!std::isfinite(rows[i].rhs) ||
                !std::all_of(rows[i].coeffs.begin(), rows[i].coeffs.end(),
                             [](double v) { return std::isfinite(v); }))
                throw parameter_error("non-finite entry in constraint " + std::to_string(i + 1));
        }
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

inline const char* to_string(LpStatus s) noexcept {
    switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> x;
    double objective = std::numeric_limits<double>::quiet_NaN();
    std::size_t iterations = 0;
    /// Largest constraint or sign violation of x (0 when not optimal).
    double max_residual = 0.0;
};

struct SimplexOptions {
    double pivot_tolerance = 1e-10;
    double feasibility_tolerance = 1e-9;
    std::size_t max_iterations = 200000;
};

namespace detail {

// Dense tableau in standard form: B^-1 A stored row-major, B^-1 b alongside.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0), b_(rows, 0.0), basis_(rows, 0) {}

    double& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    double& rhs(std::size_t r) { return b_[r]; }
    double rhs(std::size_t r) const { return b_[r]; }
    std::size_t& basic(std::size_t r) { return basis_[r]; }
    std::size_t basic(std::size_t r) const { return basis_[r]; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    void pivot(std::size_t pr, std::size_t pc) {
        double inv = 1.0 / at(pr, pc);
        double* prow = &a_[pr * cols_];
        for (std::size_t c = 0; c < cols_; ++c)
            prow[c] *= inv;
        prow[pc] = 1.0;
        b_[pr] *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr)
                continue;
            double* row = &a_[r * cols_];
            double f = row[pc];
            if (f == 0.0)
                continue;
            for (std::size_t c = 0; c < cols_; ++c)
                row[c] -= f * prow[c];
            row[pc] = 0.0;
            b_[r] -= f * b_[pr];
        }
        basis_[pr] = pc;
    }

private:
    std::size_t rows_, cols_;
    std::vector<double> a_;
    std::vector<double> b_;
    std::vector<std::size_t> basis_;
};

enum class PhaseOutcome { optimal, unbounded };

// Primal simplex with Bland's rule: lowest-index improving column enters,
// ratio ties leave by lowest basic index.
inline PhaseOutcome run_phase(Tableau& t, const std::vector<double>& cost, std::size_t allowed_cols,
                              const SimplexOptions& opt, std::size_t& iterations) {
    const std::size_t m = t.rows();
    std::vector<char> is_basic(t.cols(), 0);
    for (;;) {
        if (iterations >= opt.max_iterations)
            throw solver_error("simplex iteration limit reached");

        std::fill(is_basic.begin(), is_basic.end(), 0);
        for (std::size_t r = 0; r < m; ++r)
            is_basic[t.basic(r)] = 1;

        std::size_t entering = allowed_cols;
        for (std::size_t c = 0; c < allowed_cols; ++c) {
            if (is_basic[c])
                continue;
            double d = cost[c];
            for (std::size_t r = 0; r < m; ++r)
                d -= cost[t.basic(r)] * t.at(r, c);
            if (d < -opt.pivot_tolerance) {
                entering = c;
                break;
            }
        }
        if (entering == allowed_cols)
            return PhaseOutcome::optimal;

        std::size_t leaving = m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < m; ++r) {
            double a = t.at(r, entering);
            if (a <= opt.pivot_tolerance)
                continue;
            double ratio = std::max(t.rhs(r), 0.0) / a;
            double tie = 1e-12 * std::max(1.0, std::abs(best));
            if (leaving == m || ratio < best - tie) {
                best = ratio;
                leaving = r;
            } else if (ratio <= best + tie && t.basic(r) < t.basic(leaving)) {
                leaving = r;
            }
        }
        if (leaving == m)
            return PhaseOutcome::unbounded;

        t.pivot(leaving, entering);
        ++iterations;
    }
}

} // namespace detail

/// Two-phase dense simplex. Free variables are split into differences of
/// nonnegative parts; the first optimal basis reached under Bland's rule is returned.
inline LpResult solve_lp(const LinearProgram& lp, const SimplexOptions& opt = {}) {
    lp.validate();
    const std::size_t n = lp.num_variables();
    const std::size_t m = lp.num_constraints();

    // Structural columns: one per variable plus a negative part for free ones.
    std::vector<std::size_t> pos_col(n), neg_col(n, std::numeric_limits<std::size_t>::max());
    std::size_t structural = 0;
    for (std::size_t j = 0; j < n; ++j) {
        pos_col[j] = structural++;
        if (lp.signs[j] == VarSign::free)
            neg_col[j] = structural++;
    }

    // Normalize to nonnegative right-hand sides.
    std::vector<Sense> senses(m);
    std::vector<double> sign(m, 1.0);
    std::size_t slack_count = 0, artificial_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Sense s = lp.rows[i].sense;
        if (lp.rows[i].rhs < 0.0) {
            sign[i] = -1.0;
            if (s == Sense::less_equal)
                s = Sense::greater_equal;
            else if (s == Sense::greater_equal)
                s = Sense::less_equal;
        }
        senses[i] = s;
        if (s != Sense::equal)
            ++slack_count;
        if (s != Sense::less_equal)
            ++artificial_count;
    }

    const std::size_t first_slack = structural;
    const std::size_t first_artificial = first_slack + slack_count;
    const std::size_t cols = first_artificial + artificial_count;

    detail::Tableau t(m, cols);
    std::size_t next_slack = first_slack, next_art = first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.rows[i];
        for (std::size_t j = 0; j < n; ++j) {
            double v = sign[i] * row.coeffs[j];
            t.at(i, pos_col[j]) = v;
            if (lp.signs[j] == VarSign::free)
                t.at(i, neg_col[j]) = -v;
        }
        t.rhs(i) = sign[i] * row.rhs;
        switch (senses[i]) {
        case Sense::less_equal:
            t.at(i, next_slack) = 1.0;
            t.basic(i) = next_slack++;
            break;
        case Sense::greater_equal:
            t.at(i, next_slack++) = -1.0;
            t.at(i, next_art) = 1.0;
            t.basic(i) = next_art++;
            break;
        case Sense::equal:
            t.at(i, next_art) = 1.0;
            t.basic(i) = next_art++;
            break;
        }
    }

    LpResult result;
    double rhs_scale = 1.0;
    for (const auto& row : lp.rows)
        rhs_scale = std::max(rhs_scale, std::abs(row.rhs));

    if (artificial_count > 0) {
        std::vector<double> phase1(cols, 0.0);
        for (std::size_t c = first_artificial; c < cols; ++c)
            phase1[c] = 1.0;
        detail::run_phase(t, phase1, cols, opt, result.iterations);

        double infeasibility = 0.0;
        for (std::size_t r = 0; r < m; ++r)
            if (t.basic(r) >= first_artificial)
                infeasibility += t.rhs(r);
        if (infeasibility > opt.feasibility_tolerance * rhs_scale) {
            result.status = LpStatus::infeasible;
            return result;
        }

        // Drive zero-valued artificials out of the basis; rows where that is
        // impossible are redundant and keep their artificial at zero.
        for (std::size_t r = 0; r < m; ++r) {
            if (t.basic(r) < first_artificial)
                continue;
            for (std::size_t c = 0; c < first_artificial; ++c) {
                if (std::abs(t.at(r, c)) > opt.pivot_tolerance) {
                    t.pivot(r, c);
                    break;
                }
            }
        }
    }

    std::vector<double> phase2(cols, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        phase2[pos_col[j]] = lp.objective[j];
        if (lp.signs[j] == VarSign::free)
            phase2[neg_col[j]] = -lp.objective[j];
    }
    if (detail::run_phase(t, phase2, first_artificial, opt, result.iterations) ==
        detail::PhaseOutcome::unbounded) {
        result.status = LpStatus::unbounded;
        return result;
    }

    std::vector<double> col_value(cols, 0.0);
    for (std::size_t r = 0; r < m; ++r)
        col_value[t.basic(r)] = t.rhs(r);

    result.status = LpStatus::optimal;
    result.x.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double v = col_value[pos_col[j]];
        if (lp.signs[j] == VarSign::free)
            v -= col_value[neg_col[j]];
        else
            v = std::max(v, 0.0);
        result.x[j] = v;
    }

    result.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        result.objective += lp.objective[j] * result.x[j];

    for (const auto& row : lp.rows) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            lhs += row.coeffs[j] * result.x[j];
        double viol = 0.0;
        switch (row.sense) {
        case Sense::less_equal: viol = lhs - row.rhs; break;
        case Sense::greater_equal: viol = row.rhs - lhs; break;
        case Sense::equal: viol = std::abs(lhs - row.rhs); break;
        }
        result.max_residual = std::max(result.max_residual, viol);
    }
    return result;
}

} // namespace fuzzwave

#endif // FUZZWAVE_SIMPLEX_HPP
