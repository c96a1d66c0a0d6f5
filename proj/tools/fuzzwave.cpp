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
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "fuzzwave/cli.hpp"

namespace {

using fuzzwave::cli::OutputFormat;
using fuzzwave::cli::RunConfig;

const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::csv}, {"json", OutputFormat::json}, {"table", OutputFormat::table}};

void add_common_options(CLI::App& sub, RunConfig& cfg, std::string& out_dir, std::string& format) {
    // --h is the fuzzy threshold, so help is long-form only.
    sub.set_help_flag("--help", "Print this help message and exit");
    sub.add_option("--input", cfg.input, "CSV file holding the series")->required();
    sub.add_option("--column", cfg.column, "column name or 1-based index (default: last column)");
    sub.add_flag("--log", cfg.apply_log, "take the natural log of the series first");
    sub.add_option("--h", cfg.h, "fuzzy regression threshold in [0, 1)")->capture_default_str();
    sub.add_option("--wavelet-order", cfg.wavelet_order, "Daubechies order (vanishing moments)")
        ->capture_default_str();
    sub.add_option("--levels", cfg.levels, "decomposition depth J")->capture_default_str();
    sub.add_option("--detail-level", cfg.detail_level, "detail component D_i driving the hybrid segmentation");
    sub.add_option("--out-dir", out_dir, "directory for data files");
    sub.add_option("--format", format, "summary format")
        ->transform(CLI::IsMember({"csv", "json", "table"}, CLI::ignore_case).description(""))
        ->option_text("csv|json|table [table]");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy regression, wavelet multiresolution and hybrid piecewise estimation of time series"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string out_dir;
    std::string format = "table";
    const std::map<std::string, std::string> blurbs = {
        {"stats", "Descriptive statistics of the selected column"},
        {"fit-fuzzy", "Fit one possibilistic fuzzy line to the whole series"},
        {"decompose", "Wavelet multiresolution components A_J, D_1..D_J"},
        {"hybrid", "Piecewise fuzzy fit segmented at the extrema of one detail level"},
        {"report", "MSE/RMSE of the global fit and of every hybrid level"},
    };
    for (const auto& name : fuzzwave::cli::command_names())
        add_common_options(*app.add_subcommand(name, blurbs.at(name)), cfg, out_dir, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (!out_dir.empty())
        cfg.out_dir = out_dir;
    cfg.format = kFormats.at(format);
    const std::string command = app.get_subcommands().front()->get_name();
    return fuzzwave::cli::execute(command, cfg, std::cout, std::cerr);
}
