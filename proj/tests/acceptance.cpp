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
// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Usage: fuzzwave_acceptance <path-to-fuzzwave-cli> <work-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzwave.hpp"
#include "fuzzwave/csv.hpp"
#include "oracles.hpp"

using namespace fuzzwave;
namespace fs = std::filesystem;

namespace {

const fs::path kFixture = fs::path(FUZZWAVE_DATA_DIR) / "sp500_monthly_1998_2009.csv";

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        detail = pass ? why : detail + "; " + why;
        pass = false;
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<double> random_walk(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> step(0.0, 1.0);
    std::vector<double> y(n);
    double v = 0.0;
    for (auto& e : y)
        e = (v += step(rng));
    return y;
}

Outcome perfect_reconstruction() {
    Outcome out;
    std::mt19937_64 rng(1001);
    const std::size_t lengths[] = {8, 64, 128};
    double worst_dwt = 0.0, worst_mra = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = lengths[trial % 3];
        const int order = 1 + (trial / 3) % 4;
        const int max_level = static_cast<int>(std::log2(static_cast<double>(n))) - 1;
        const int levels = 1 + trial % max_level;
        const auto x = oracle::random_vector(rng, n, -10.0, 10.0);
        const DaubechiesFilter filter(order);
        const double scale = oracle::norm(x);

        const auto back = dwt_inverse(dwt_forward(std::span<const double>(x), filter, levels), filter);
        const double e1 = oracle::diff_norm(x, back.values()) / scale;
        const auto mra = mra_decompose(TimeSeries(x), filter, levels);
        const double e2 = oracle::diff_norm(x, mra.reconstruct()) / scale;
        worst_dwt = std::max(worst_dwt, e1);
        worst_mra = std::max(worst_mra, e2);
    }
    if (worst_dwt > 1e-10)
        out.fail("inverse(forward(x)) relative error " + fmt("%.3g", worst_dwt));
    if (worst_mra > 1e-8)
        out.fail("A_J + sum D_j relative error " + fmt("%.3g", worst_mra));
    if (out.pass)
        out.detail = "worst relative errors " + fmt("%.2g", worst_dwt) + " / " + fmt("%.2g", worst_mra);
    return out;
}

Outcome vanishing_moments() {
    Outcome out;
    const auto coeffs = dwt_forward(TimeSeries(std::vector<double>(128, 3.7)), DaubechiesFilter(4), 6);
    double worst = 0.0;
    for (const auto& level : coeffs.details)
        for (double d : level)
            worst = std::max(worst, std::abs(d));
    const auto mra = mra_decompose(TimeSeries(std::vector<double>(128, 3.7)), DaubechiesFilter(4), 6);
    for (int j = 1; j <= 6; ++j)
        for (double d : mra.detail(j).values())
            worst = std::max(worst, std::abs(d));
    out.detail = "max |detail| " + fmt("%.2g", worst);
    if (!(worst < 1e-10))
        out.fail(out.detail);
    return out;
}

Outcome lp_oracle() {
    Outcome out;
    std::mt19937_64 rng(3003);
    std::uniform_int_distribution<int> len(2, 10);
    std::uniform_real_distribution<double> hs(0.0, 0.95);
    double worst_obj = 0.0, worst_band = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const TimeSeries s(oracle::random_vector(rng, static_cast<std::size_t>(len(rng)), -5.0, 5.0));
        const double h = hs(rng);
        const auto model = fit_fuzzy_line(s, h);
        const auto ref = oracle::vertex_enumeration(build_lp(s, h));
        if (!ref) {
            out.fail("oracle found no vertex on trial " + std::to_string(trial));
            continue;
        }
        worst_obj = std::max(worst_obj, std::abs(model.objective - *ref));
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto band = evaluate_band(model, static_cast<double>(s.time_at(i)));
            worst_band = std::max({worst_band, band.lower - s[i], s[i] - band.upper});
        }
    }
    if (worst_obj > 1e-6)
        out.fail("objective differs from oracle by " + fmt("%.3g", worst_obj));
    if (worst_band > 1e-9)
        out.fail("observation outside band by " + fmt("%.3g", worst_band));
    if (out.pass)
        out.detail = "max objective gap " + fmt("%.2g", worst_obj);
    return out;
}

Outcome collinearity() {
    Outcome out;
    std::mt19937_64 rng(4004);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double b0 = coef(rng), b1 = coef(rng);
        std::vector<double> y(3 + trial % 10);
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] = b0 + b1 * static_cast<double>(i + 1);
        const auto m = fit_fuzzy_line(TimeSeries(y), 0.5);
        if (m.objective > 1e-9)
            out.fail("line input has objective " + fmt("%.3g", m.objective));

        const double c = coef(rng);
        const auto k = fit_fuzzy_line(TimeSeries(std::vector<double>(y.size(), c)), 0.5);
        const double dev = std::max({std::abs(k.a0.center - c), std::abs(k.a0.spread), std::abs(k.a1.center),
                                     std::abs(k.a1.spread)});
        if (dev > 1e-9)
            out.fail("constant input coefficients off by " + fmt("%.3g", dev));
    }
    if (out.pass)
        out.detail = "20 lines, 20 constants";
    return out;
}

Outcome refinement_dominance() {
    Outcome out;
    std::mt19937_64 rng(5005);
    int violations = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 48;
        const TimeSeries s(random_walk(rng, n));
        std::vector<std::size_t> coarse{1};
        for (std::size_t p = 3; p + 2 <= n; ++p)
            if (rng() % 8 == 0 && p - coarse.back() >= 2)
                coarse.push_back(p);
        coarse.push_back(n);
        std::vector<std::size_t> fine;
        for (std::size_t k = 0; k + 1 < coarse.size(); ++k) {
            fine.push_back(coarse[k]);
            for (std::size_t p = coarse[k] + 1; p < coarse[k + 1]; ++p)
                if (rng() % 3 == 0)
                    fine.push_back(p);
        }
        fine.push_back(n);
        const double c = estimate_on_segmentation(s, Segmentation(coarse), 0.5).total_objective();
        const double f = estimate_on_segmentation(s, Segmentation(fine), 0.5).total_objective();
        if (f > c + 1e-9) {
            ++violations;
            worst = std::max(worst, f - c);
        }
    }
    if (violations > 0)
        out.fail(std::to_string(violations) + "/20 refinements raise the summed objective (worst +" +
                 fmt("%.3g", worst) + ")");
    else
        out.detail = "20 nested pairs";
    return out;
}

Outcome table_trend() {
    Outcome out;
    const auto series = log_transform(csv::load_csv(kFixture, "close"));
    const auto mra = mra_decompose(series, DaubechiesFilter(4), 6);
    const auto report = error_report(series, mra, 0.5);
    std::ostringstream summary;
    for (const auto& row : report.rows)
        summary << (summary.tellp() ? " " : "") << (row.level ? "D" + std::to_string(row.level) : "global") << "="
                << fmt("%.4g", row.mse);
    if (report.rows.size() != 7)
        out.fail("expected 7 report rows");
    const double global = report.rows.front().mse;
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        if (!(global > report.rows[i].mse))
            out.fail("global MSE not above " + report.rows[i].model);
        if (i + 1 < report.rows.size() && !(report.rows[i].mse > report.rows[i + 1].mse))
            out.fail(report.rows[i + 1].model + " MSE " + fmt("%.4g", report.rows[i + 1].mse) + " not below " +
                     report.rows[i].model + " " + fmt("%.4g", report.rows[i].mse));
    }
    out.detail = out.pass ? summary.str() : out.detail + "; " + summary.str();
    return out;
}

Outcome descriptive_statistics() {
    Outcome out;
    std::mt19937_64 rng(7007);
    std::uniform_int_distribution<int> len(2, 500);
    double worst = 0.0;
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    for (int trial = 0; trial < 100; ++trial) {
        auto x = oracle::random_vector(rng, static_cast<std::size_t>(len(rng)), -50.0, 50.0);
        if (trial % 4 == 0)
            for (auto& v : x)
                v = 100.0 + v * 0.02;
        const auto got = describe(std::span<const double>(x));
        const auto ref = oracle::two_pass(x);
        worst = std::max({worst, rel(got.mean, ref.mean), rel(got.variance, ref.variance),
                          rel(*got.skewness, ref.skewness), rel(*got.kurtosis, ref.kurtosis)});
    }
    if (worst > 1e-12)
        out.fail("two-pass oracle mismatch " + fmt("%.3g", worst));

    std::normal_distribution<double> nd;
    std::vector<double> z(100000);
    for (auto& v : z)
        v = nd(rng);
    const double k = *describe(std::span<const double>(z)).kurtosis;
    if (std::abs(k - 3.0) > 0.2)
        out.fail("normal kurtosis " + fmt("%.4g", k));

    const auto st = describe(log_transform(csv::load_csv(kFixture, "close")));
    const std::string fixture = "fixture mean " + fmt("%.4f", st.mean) + " skew " + fmt("%.3f", *st.skewness) +
                                " kurt " + fmt("%.3f", *st.kurtosis);
    if (!(*st.kurtosis > 3.0))
        out.fail("fixture kurtosis " + fmt("%.4g", *st.kurtosis) + " is not above 3");
    if (!(*st.skewness < 0.0))
        out.fail("fixture skewness " + fmt("%.4g", *st.skewness) + " is not negative");
    if (st.mean < 7.0 || st.mean > 7.2)
        out.fail("fixture mean " + fmt("%.4g", st.mean) + " outside [7.0, 7.2]");
    out.detail = (out.pass ? "" : out.detail + "; ") + "oracle gap " + fmt("%.2g", worst) + ", normal kurt " +
                 fmt("%.3f", k) + ", " + fixture;
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_round_trip(const std::string& cli, const fs::path& work) {
    Outcome out;
    fs::remove_all(work);
    fs::create_directories(work);
    std::string stdout_text[2];
    for (int run = 0; run < 2; ++run) {
        const fs::path dir = work / ("run" + std::to_string(run));
        const fs::path log = work / ("stdout" + std::to_string(run) + ".txt");
        const std::string cmd = "\"" + cli + "\" decompose --input \"" + kFixture.string() +
                                "\" --column close --log --out-dir \"" + dir.string() + "\" > \"" + log.string() +
                                "\"";
        if (std::system(cmd.c_str()) != 0) {
            out.fail("decompose exited nonzero");
            return out;
        }
        stdout_text[run] = slurp(log);
    }
    const std::string a = slurp(work / "run0" / "components.csv");
    const std::string b = slurp(work / "run1" / "components.csv");
    if (a.empty())
        out.fail("components.csv missing");
    if (a != b || stdout_text[0] != stdout_text[1])
        out.fail("repeated runs differ");

    const auto input = log_transform(csv::load_csv(kFixture, "close"));
    std::vector<double> sum(input.size(), 0.0);
    double worst = 0.0;
    try {
        for (const char* name : {"A6", "D1", "D2", "D3", "D4", "D5", "D6"}) {
            const auto comp = csv::parse_series(a, name);
            if (comp.size() != input.size())
                throw shape_error(std::string(name) + " has wrong length");
            for (std::size_t i = 0; i < comp.size(); ++i)
                sum[i] += comp[i];
        }
        for (std::size_t i = 0; i < sum.size(); ++i)
            worst = std::max(worst, std::abs(sum[i] - input[i]));
    } catch (const std::exception& e) {
        out.fail(e.what());
    }
    if (worst > 1e-8)
        out.fail("re-summed components differ by " + fmt("%.3g", worst));
    if (out.pass)
        out.detail = "max |sum - input| " + fmt("%.2g", worst) + ", byte-identical";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <fuzzwave-cli> <work-dir>\n", argv[0]);
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path work = argv[2];

    struct Criterion {
        const char* name;
        double budget_s; // 0 means no runtime bound
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"perfect reconstruction", 2.0, perfect_reconstruction},
        {"vanishing moments", 0.0, vanishing_moments},
        {"LP oracle equivalence", 5.0, lp_oracle},
        {"collinearity", 0.0, collinearity},
        {"refinement dominance", 0.0, refinement_dominance},
        {"SP500 error trend", 10.0, table_trend},
        {"descriptive statistics", 0.0, descriptive_statistics},
        {"CLI round-trip", 0.0, [&] { return cli_round_trip(cli, work); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0.0 && secs > c.budget_s)
            o.fail("took " + fmt("%.2f", secs) + " s, budget " + fmt("%.0f", c.budget_s) + " s");
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %zu %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, secs, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
