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
#ifndef FUZZWAVE_CSV_HPP
#define FUZZWAVE_CSV_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "fuzzwave/error.hpp"
#include "fuzzwave/timeseries.hpp"

namespace fuzzwave::csv {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        s = s.substr(1, s.size() - 2);
    return s;
}

inline std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        cells.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return cells;
}

/// Parses a finite real; the whole cell must be consumed.
inline std::optional<double> parse_real(std::string_view cell) {
    if (cell.empty())
        return std::nullopt;
    if (cell.front() == '+')
        cell.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

/// Column selector: empty picks the last column, all digits is a 1-based
/// index, anything else is a header name.
inline TimeSeries parse_series(std::string_view text, const std::string& column = {}) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t row = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        ++row;
        std::string_view line = text.substr(pos, nl - pos);
        if (!trim(line).empty())
            lines.emplace_back(row, line);
        pos = nl + 1;
    }
    if (lines.empty())
        throw parse_error("input has no rows", 0);

    const auto first = split_line(lines.front().second);
    const bool has_header = std::any_of(first.begin(), first.end(),
                                        [](const std::string& c) { return !parse_real(c).has_value(); });

    std::size_t col = first.size() - 1;
    std::string label = has_header ? first.back() : std::string{};
    if (!column.empty()) {
        if (std::all_of(column.begin(), column.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            const std::size_t idx = std::stoul(column);
            if (idx < 1 || idx > first.size())
                throw parse_error("column index " + column + " outside [1, " + std::to_string(first.size()) + "]",
                                  lines.front().first);
            col = idx - 1;
            label = has_header ? first[col] : "column " + column;
        } else {
            if (!has_header)
                throw parse_error("column '" + column + "' requested but input has no header row",
                                  lines.front().first);
            const auto it = std::find(first.begin(), first.end(), column);
            if (it == first.end())
                throw parse_error("no column named '" + column + "'", lines.front().first);
            col = static_cast<std::size_t>(it - first.begin());
            label = column;
        }
    } else if (!has_header) {
        label = "column " + std::to_string(col + 1);
    }

    std::vector<double> values;
    values.reserve(lines.size());
    for (std::size_t i = has_header ? 1 : 0; i < lines.size(); ++i) {
        const auto& [r, line] = lines[i];
        const auto cells = split_line(line);
        if (col >= cells.size())
            throw parse_error("row " + std::to_string(r) + " has no column " + std::to_string(col + 1), r);
        const auto v = parse_real(cells[col]);
        if (!v)
            throw parse_error("row " + std::to_string(r) + ": cannot parse '" + cells[col] + "' as a number", r);
        values.push_back(*v);
    }
    if (values.empty())
        throw parse_error("column '" + label + "' has no values", lines.front().first);
    return TimeSeries(std::move(values), label);
}

inline TimeSeries load_csv(const std::filesystem::path& path, const std::string& column = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_series(buf.str(), column);
}

/// Real number with 10 significant digits.
inline std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    std::string s(buf);
    return s == "-0" ? "0" : s;
}

inline double round_to_format(double v) { return std::stod(format_number(v)); }

/// Numeric table with a header row; every column has the same length.
inline std::string write_table(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns) {
    if (names.size() != columns.size())
        throw shape_error("column name count does not match column count");
    std::string out;
    for (std::size_t c = 0; c < names.size(); ++c) {
        out += (c ? "," : "");
        out += names[c];
    }
    out += '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& col : columns)
        if (col.size() != rows)
            throw shape_error("ragged columns");
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out += (c ? "," : "");
            out += format_number(columns[c][r]);
        }
        out += '\n';
    }
    return out;
}

struct OutputFile {
    std::string name;
    std::string content;
};

/// Writes every file to a temporary sibling first and renames only once all
/// writes succeeded, so a failure leaves no partial outputs behind.
inline void write_files_atomically(const std::filesystem::path& dir, const std::vector<OutputFile>& files) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw io_error("cannot create output directory " + dir.string() + ": " + ec.message());

    std::vector<std::pair<fs::path, fs::path>> staged;
    auto cleanup = [&] {
        for (const auto& [tmp, _] : staged)
            fs::remove(tmp, ec);
    };
    for (const auto& f : files) {
        const fs::path target = dir / f.name;
        const fs::path tmp = dir / ("." + f.name + ".tmp");
        staged.emplace_back(tmp, target);
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << f.content;
        out.close();
        if (!out) {
            cleanup();
            throw io_error("cannot write " + target.string());
        }
    }
    for (const auto& [tmp, target] : staged) {
        fs::rename(tmp, target, ec);
        if (ec) {
            cleanup();
            throw io_error("cannot move " + tmp.string() + " to " + target.string() + ": " + ec.message());
        }
    }
}

} // namespace fuzzwave::csv

#endif // FUZZWAVE_CSV_HPP
