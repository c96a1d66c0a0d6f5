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
#ifndef FUZZWAVE_CLI_HPP
#define FUZZWAVE_CLI_HPP

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fuzzwave/csv.hpp"
#include "fuzzwave/error.hpp"
#include "fuzzwave/fuzzy_regression.hpp"
#include "fuzzwave/hybrid.hpp"
#include "fuzzwave/timeseries.hpp"
#include "fuzzwave/wavelet.hpp"

namespace fuzzwave::cli {

enum class OutputFormat { csv, json, table };

struct RunConfig {
    std::filesystem::path input;
    std::string column;
    bool apply_log = false;
    double h = default_threshold;
    int wavelet_order = 4;
    int levels = 6;
    std::optional<int> detail_level;
    std::optional<std::filesystem::path> out_dir;
    OutputFormat format = OutputFormat::table;

    void validate() const {
        check_threshold(h);
        if (levels < 1)
            throw parameter_error("--levels must be >= 1, got " + std::to_string(levels));
        if (wavelet_order < 1 || wavelet_order > 10)
            throw parameter_error("--wavelet-order must be in [1, 10], got " + std::to_string(wavelet_order));
        if (detail_level && (*detail_level < 1 || *detail_level > levels))
            throw parameter_error("--detail-level must be in [1, " + std::to_string(levels) + "], got " +
                                  std::to_string(*detail_level));
    }
};

struct CommandOutput {
    std::string summary; ///< rendered in the configured format, for stdout
    std::vector<csv::OutputFile> files; ///< written only when an output directory is set
};

namespace detail {

using json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

inline json number(double v) { return csv::round_to_format(v); }

inline json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

inline std::string cell(const std::optional<double>& v) { return v ? csv::format_number(*v) : "undefined"; }

inline std::string render_rows(const Row& header, const std::vector<Row>& rows, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::csv) {
        auto emit = [&](const Row& r) {
            for (std::size_t i = 0; i < r.size(); ++i)
                out += (i ? "," : "") + r[i];
            out += '\n';
        };
        emit(header);
        for (const auto& r : rows)
            emit(r);
        return out;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i)
        width[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], r[i].size());
    auto emit = [&](const Row& r) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size())
                line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out += line + '\n';
    };
    emit(header);
    for (const auto& r : rows)
        emit(r);
    return out;
}

inline std::string render(const json& doc, const Row& header, const std::vector<Row>& rows, OutputFormat format) {
    if (format == OutputFormat::json)
        return doc.dump(2) + "\n";
    return render_rows(header, rows, format);
}

inline TimeSeries load_input(const RunConfig& cfg) {
    TimeSeries s = csv::load_csv(cfg.input, cfg.column);
    return cfg.apply_log ? log_transform(s) : s;
}

inline json header_fields(std::string_view command, const RunConfig& cfg, const TimeSeries& s) {
    json j;
    j["command"] = command;
    j["input"] = cfg.input.string();
    j["column"] = s.label();
    j["log"] = cfg.apply_log;
    j["n"] = s.size();
    return j;
}

inline std::string estimate_csv(const TimeSeries& s, std::span<const double> center, std::span<const double> lower,
                                std::span<const double> upper) {
    std::vector<double> t(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        t[i] = static_cast<double>(s.time_at(i));
    return csv::write_table({"t", "observed", "center", "lower", "upper"},
                            {t, {s.values().begin(), s.values().end()}, {center.begin(), center.end()},
                             {lower.begin(), lower.end()}, {upper.begin(), upper.end()}});
}

inline json model_json(const FuzzyLinearModel& m) {
    json j;
    j["a0"] = {{"center", number(m.a0.center)}, {"spread", number(m.a0.spread)}};
    j["a1"] = {{"center", number(m.a1.center)}, {"spread", number(m.a1.spread)}};
    j["h"] = number(m.h);
    j["objective"] = number(m.objective);
    return j;
}

inline MRADecomposition decompose_input(const TimeSeries& s, const RunConfig& cfg) {
    return mra_decompose(s, DaubechiesFilter(cfg.wavelet_order), cfg.levels);
}

inline CommandOutput cmd_stats(const RunConfig& cfg) {
    const TimeSeries s = load_input(cfg);
    const SeriesStats st = describe(s);
    json doc = header_fields("stats", cfg, s);
    doc["mean"] = number(st.mean);
    doc["variance"] = number(st.variance);
    doc["max"] = number(st.max);
    doc["min"] = number(st.min);
    doc["kurtosis"] = optional_number(st.kurtosis);
    doc["skewness"] = optional_number(st.skewness);
    std::vector<Row> rows{{"N", std::to_string(st.n)},
                          {"Mean", csv::format_number(st.mean)},
                          {"Variance", csv::format_number(st.variance)},
                          {"Maximum", csv::format_number(st.max)},
                          {"Minimum", csv::format_number(st.min)},
                          {"Kurtosis", cell(st.kurtosis)},
                          {"Skewness", cell(st.skewness)}};
    return {render(doc, {"statistic", "value"}, rows, cfg.format), {}};
}

inline CommandOutput cmd_fit_fuzzy(const RunConfig& cfg) {
    const TimeSeries s = load_input(cfg);
    const FuzzyLinearModel m = fit_fuzzy_line(s, cfg.h);
    const BandSeries band = evaluate_bands(m, s);
    const double e = mse(s.values(), band.center);
    json doc = header_fields("fit-fuzzy", cfg, s);
    doc["model"] = model_json(m);
    doc["mse"] = number(e);
    doc["rmse"] = number(std::sqrt(e));
    std::vector<Row> rows{{"a0_center", csv::format_number(m.a0.center)},
                          {"a0_spread", csv::format_number(m.a0.spread)},
                          {"a1_center", csv::format_number(m.a1.center)},
                          {"a1_spread", csv::format_number(m.a1.spread)},
                          {"h", csv::format_number(m.h)},
                          {"objective", csv::format_number(m.objective)},
                          {"mse", csv::format_number(e)},
                          {"rmse", csv::format_number(std::sqrt(e))}};
    return {render(doc, {"parameter", "value"}, rows, cfg.format),
            {{"fit_fuzzy.csv", estimate_csv(s, band.center, band.lower, band.upper)}}};
}

inline CommandOutput cmd_decompose(const RunConfig& cfg) {
    const TimeSeries s = load_input(cfg);
    const MRADecomposition mra = decompose_input(s, cfg);

    std::vector<std::string> names{"t", mra.approximation.label()};
    std::vector<std::vector<double>> columns(1);
    for (std::size_t i = 0; i < s.size(); ++i)
        columns[0].push_back(static_cast<double>(s.time_at(i)));
    std::vector<const TimeSeries*> components{&mra.approximation};
    for (const auto& d : mra.details)
        components.push_back(&d);
    for (std::size_t c = 1; c < components.size(); ++c)
        names.push_back(components[c]->label());

    json doc = header_fields("decompose", cfg, s);
    doc["wavelet"] = "db" + std::to_string(cfg.wavelet_order);
    doc["levels"] = cfg.levels;
    json comps = json::array();
    std::vector<Row> rows;
    for (const TimeSeries* comp : components) {
        columns.emplace_back(comp->values().begin(), comp->values().end());
        const double var = describe(*comp).variance;
        comps.push_back({{"name", comp->label()}, {"variance", number(var)}});
        rows.push_back({comp->label(), csv::format_number(var)});
    }
    doc["components"] = std::move(comps);
    return {render(doc, {"component", "variance"}, rows, cfg.format),
            {{"components.csv", csv::write_table(names, columns)}}};
}

inline std::string segments_csv(const HybridEstimate& est) {
    std::string out = "segment,start,end,a0_center,a0_spread,a1_center,a1_spread,objective\n";
    for (std::size_t k = 0; k < est.segment_models.size(); ++k) {
        const auto [first, last] = est.segmentation.fit_range(k);
        const auto& m = est.segment_models[k];
        out += std::to_string(k + 1) + "," + std::to_string(first) + "," + std::to_string(last) + "," +
               csv::format_number(m.a0.center) + "," + csv::format_number(m.a0.spread) + "," +
               csv::format_number(m.a1.center) + "," + csv::format_number(m.a1.spread) + "," +
               csv::format_number(m.objective) + "\n";
    }
    return out;
}

inline CommandOutput cmd_hybrid(const RunConfig& cfg) {
    if (!cfg.detail_level)
        throw parameter_error("hybrid requires --detail-level");
    const TimeSeries s = load_input(cfg);
    const MRADecomposition mra = decompose_input(s, cfg);
    const int level = *cfg.detail_level;
    const HybridEstimate est = estimate_hybrid(s, mra, level, cfg.h);
    const double e = mse(s, est.center);

    json doc = header_fields("hybrid", cfg, s);
    doc["wavelet"] = "db" + std::to_string(cfg.wavelet_order);
    doc["levels"] = cfg.levels;
    doc["detail_level"] = level;
    doc["h"] = number(cfg.h);
    doc["boundaries"] = est.segmentation.boundaries();
    json segs = json::array();
    for (const auto& m : est.segment_models)
        segs.push_back(model_json(m));
    doc["segments"] = std::move(segs);
    doc["mse"] = number(e);
    doc["rmse"] = number(std::sqrt(e));

    std::string bounds;
    for (std::size_t b : est.segmentation.boundaries())
        bounds += (bounds.empty() ? "" : " ") + std::to_string(b);
    std::vector<Row> rows{{"detail_level", std::to_string(level)},
                          {"h", csv::format_number(cfg.h)},
                          {"segments", std::to_string(est.segmentation.segment_count())},
                          {"boundaries", bounds},
                          {"mse", csv::format_number(e)},
                          {"rmse", csv::format_number(std::sqrt(e))}};
    const std::string tag = "D" + std::to_string(level);
    return {render(doc, {"field", "value"}, rows, cfg.format),
            {{"hybrid_" + tag + ".csv",
              estimate_csv(s, est.center.values(), est.lower.values(), est.upper.values())},
             {"segments_" + tag + ".csv", segments_csv(est)}}};
}

inline CommandOutput cmd_report(const RunConfig& cfg) {
    const TimeSeries s = load_input(cfg);
    const MRADecomposition mra = decompose_input(s, cfg);
    const ErrorReport report = error_report(s, mra, cfg.h);

    json doc = header_fields("report", cfg, s);
    doc["wavelet"] = "db" + std::to_string(cfg.wavelet_order);
    doc["levels"] = cfg.levels;
    doc["h"] = number(cfg.h);
    json rows_json = json::array();
    std::vector<Row> rows;
    std::string report_csv = "model,mse,rmse\n";
    for (const auto& r : report.rows) {
        rows_json.push_back({{"model", r.model}, {"level", r.level}, {"mse", number(r.mse)}, {"rmse", number(r.rmse)}});
        rows.push_back({r.model, csv::format_number(r.mse), csv::format_number(r.rmse)});
        report_csv += r.model + "," + csv::format_number(r.mse) + "," + csv::format_number(r.rmse) + "\n";
    }
    doc["rows"] = std::move(rows_json);

    std::vector<csv::OutputFile> files{{"report.csv", report_csv},
                                       {"estimate_fuzzy.csv", estimate_csv(s, report.global_band.center,
                                                                           report.global_band.lower,
                                                                           report.global_band.upper)}};
    for (const auto& est : report.hybrids)
        files.push_back({"estimate_D" + std::to_string(est.level) + ".csv",
                         estimate_csv(s, est.center.values(), est.lower.values(), est.upper.values())});
    return {render(doc, {"model", "MSE", "RMSE"}, rows, cfg.format), std::move(files)};
}

} // namespace detail

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"stats", "fit-fuzzy", "decompose", "hybrid", "report"};
    return names;
}

/// Runs a command fully in memory; nothing is written.
inline CommandOutput run_command(std::string_view command, const RunConfig& cfg) {
    cfg.validate();
    if (command == "stats")
        return detail::cmd_stats(cfg);
    if (command == "fit-fuzzy")
        return detail::cmd_fit_fuzzy(cfg);
    if (command == "decompose")
        return detail::cmd_decompose(cfg);
    if (command == "hybrid")
        return detail::cmd_hybrid(cfg);
    if (command == "report")
        return detail::cmd_report(cfg);
    throw parameter_error("unknown command '" + std::string(command) + "'");
}

/// Runs a command, writes its data files and prints the summary. Returns the
/// process exit code; errors produce a single diagnostic line on `err`.
inline int execute(std::string_view command, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        CommandOutput result = run_command(command, cfg);
        if (cfg.out_dir)
            csv::write_files_atomically(*cfg.out_dir, result.files);
        out << result.summary;
        out.flush();
        return 0;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << '\n';
        return 1;
    }
}

} // namespace fuzzwave::cli

#endif // FUZZWAVE_CLI_HPP
