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
#include <random>

#include <gtest/gtest.h>

#include "fuzzwave/simplex.hpp"
#include "oracles.hpp"

using namespace fuzzwave;

namespace {

LinearProgram random_lp(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coef(-3.0, 3.0), cost(0.1, 2.0), rhs(-5.0, 5.0);
    std::uniform_int_distribution<int> rows(1, 10), sense(0, 2);
    LinearProgram lp;
    lp.objective = {cost(rng), cost(rng), cost(rng), cost(rng)};
    lp.signs.assign(4, VarSign::nonnegative);
    const int m = rows(rng);
    for (int i = 0; i < m; ++i) {
        Constraint c{{coef(rng), coef(rng), coef(rng), coef(rng)}, Sense::less_equal, rhs(rng)};
        const int s = sense(rng);
        // Equalities are rarer so most instances stay feasible.
        c.sense = s == 0 ? Sense::less_equal : (s == 1 || i > 1 ? Sense::greater_equal : Sense::equal);
        lp.rows.push_back(c);
    }
    return lp;
}

} // namespace

TEST(Simplex, SingleLowerBound) {
    LinearProgram lp{{1.0}, {{{1.0}, Sense::greater_equal, 3.0}}, {VarSign::nonnegative}};
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_NEAR(r.x[0], 3.0, 1e-12);
    EXPECT_NEAR(r.objective, 3.0, 1e-12);
}

TEST(Simplex, ReportsUnbounded) {
    LinearProgram lp{{-1.0, 0.0}, {{{0.0, 1.0}, Sense::less_equal, 1.0}}, {VarSign::nonnegative, VarSign::nonnegative}};
    EXPECT_EQ(solve_lp(lp).status, LpStatus::unbounded);

    LinearProgram free_lp{{1.0}, {}, {VarSign::free}};
    EXPECT_EQ(solve_lp(free_lp).status, LpStatus::unbounded);
}

TEST(Simplex, ReportsInfeasible) {
    LinearProgram lp{{1.0},
                     {{{1.0}, Sense::less_equal, 1.0}, {{1.0}, Sense::greater_equal, 2.0}},
                     {VarSign::nonnegative}};
    EXPECT_EQ(solve_lp(lp).status, LpStatus::infeasible);
}

TEST(Simplex, FreeVariableGoesNegative) {
    // minimize x subject to x >= -4 with x free.
    LinearProgram lp{{1.0}, {{{1.0}, Sense::greater_equal, -4.0}}, {VarSign::free}};
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_NEAR(r.x[0], -4.0, 1e-12);
}

TEST(Simplex, RedundantEqualities) {
    LinearProgram lp{{1.0, 0.0},
                     {{{1.0, 1.0}, Sense::equal, 2.0}, {{2.0, 2.0}, Sense::equal, 4.0}},
                     {VarSign::nonnegative, VarSign::nonnegative}};
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_NEAR(r.objective, 0.0, 1e-12);
    EXPECT_NEAR(r.x[1], 2.0, 1e-12);
    EXPECT_LE(r.max_residual, 1e-9);
}

TEST(Simplex, BealeCyclingExampleTerminates) {
    LinearProgram lp;
    lp.objective = {-0.75, 20.0, -0.5, 6.0};
    lp.signs.assign(4, VarSign::nonnegative);
    lp.rows = {{{0.25, -8.0, -1.0, 9.0}, Sense::less_equal, 0.0},
               {{0.5, -12.0, -0.5, 3.0}, Sense::less_equal, 0.0},
               {{0.0, 0.0, 1.0, 0.0}, Sense::less_equal, 1.0}};
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_NEAR(r.objective, -1.25, 1e-12);
}

TEST(Simplex, MalformedProgram) {
    LinearProgram lp{{1.0, 1.0}, {{{1.0}, Sense::less_equal, 1.0}}, {VarSign::nonnegative, VarSign::nonnegative}};
    EXPECT_THROW(solve_lp(lp), shape_error);
    LinearProgram no_vars;
    EXPECT_THROW(solve_lp(no_vars), parameter_error);
}

TEST(Simplex, MatchesVertexEnumerationOnRandomPrograms) {
    std::mt19937_64 rng(424242);
    int optimal = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto lp = random_lp(rng);
        const auto r = solve_lp(lp);
        const auto ref = oracle::vertex_enumeration(lp);
        ASSERT_NE(r.status, LpStatus::unbounded) << "trial " << trial;
        if (!ref) {
            EXPECT_EQ(r.status, LpStatus::infeasible) << "trial " << trial;
            continue;
        }
        ASSERT_EQ(r.status, LpStatus::optimal) << "trial " << trial;
        EXPECT_NEAR(r.objective, *ref, 1e-6) << "trial " << trial;
        EXPECT_LE(r.max_residual, 1e-9) << "trial " << trial;
        ++optimal;
    }
    EXPECT_GE(optimal, 25);
}
