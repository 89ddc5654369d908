// Copyright 2026 The Plateau Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "plateau/harness/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "plateau/errors.hpp"

namespace plateau {

namespace {

struct Column {
    const char *name;
    std::function<std::string(const SweepRow &)> get;
    std::function<void(SweepRow &, const std::string &)> set;
};

double to_double(const std::string &s) {
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw ParseError("", "bad number '" + s + "'");
    }
    return v;
}

std::uint64_t to_u64(const std::string &s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("", "bad integer '" + s + "'");
    }
    return std::stoull(s);
}

template <class T> Column text_col(const char *name, T SweepRow::*field) {
    return {name, [field](const SweepRow &r) { return r.*field; },
            [field](SweepRow &r, const std::string &s) { r.*field = s; }};
}

template <class T> Column int_col(const char *name, T SweepRow::*field) {
    return {name, [field](const SweepRow &r) { return std::to_string(r.*field); },
            [field](SweepRow &r, const std::string &s) { r.*field = static_cast<T>(to_u64(s)); }};
}

Column real_col(const char *name, double SweepRow::*field) {
    return {name, [field](const SweepRow &r) { return format_double(r.*field); },
            [field](SweepRow &r, const std::string &s) { r.*field = to_double(s); }};
}

Column opt_col(const char *name, std::optional<double> SweepRow::*field) {
    return {name,
            [field](const SweepRow &r) {
                return (r.*field).has_value() ? format_double(*(r.*field)) : std::string();
            },
            [field](SweepRow &r, const std::string &s) {
                if (s.empty()) {
                    (r.*field).reset();
                } else {
                    r.*field = to_double(s);
                }
            }};
}

const std::vector<Column> &columns() {
    static const std::vector<Column> cols = {
        text_col("experiment", &SweepRow::experiment),
        int_col("n", &SweepRow::n),
        int_col("depth", &SweepRow::depth),
        text_col("scheme", &SweepRow::scheme),
        text_col("axes", &SweepRow::axes),
        real_col("r", &SweepRow::r),
        int_col("target_layer", &SweepRow::target_layer),
        int_col("target_qubit", &SweepRow::target_qubit),
        text_col("cost", &SweepRow::cost),
        int_col("n_samples", &SweepRow::n_samples),
        int_col("seed", &SweepRow::seed),
        opt_col("mean", &SweepRow::mean),
        opt_col("mean_stderr", &SweepRow::mean_stderr),
        opt_col("variance", &SweepRow::variance),
        opt_col("variance_stderr", &SweepRow::variance_stderr),
        opt_col("f_rho", &SweepRow::f_rho),
        opt_col("f_rho_stderr", &SweepRow::f_rho_stderr),
        opt_col("f_h", &SweepRow::f_h),
        opt_col("f_h_stderr", &SweepRow::f_h_stderr),
        opt_col("ratio_rho", &SweepRow::ratio_rho),
        opt_col("ratio_h", &SweepRow::ratio_h),
        opt_col("eps_rho", &SweepRow::eps_rho),
        opt_col("eps_h", &SweepRow::eps_h),
        opt_col("bound_r", &SweepRow::bound_r),
        opt_col("bound_l", &SweepRow::bound_l),
        opt_col("bound_rl", &SweepRow::bound_rl),
        opt_col("slack_r", &SweepRow::slack_r),
        opt_col("slack_l", &SweepRow::slack_l),
        opt_col("slack_rl", &SweepRow::slack_rl),
        opt_col("wall_ms", &SweepRow::wall_ms),
    };
    return cols;
}

std::vector<std::string> split_commas(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(',', start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

} // namespace

bool SweepRow::same_cell(const SweepRow &o) const noexcept {
    return experiment == o.experiment && n == o.n && depth == o.depth && scheme == o.scheme &&
           axes == o.axes && r == o.r && target_layer == o.target_layer &&
           target_qubit == o.target_qubit && cost == o.cost && n_samples == o.n_samples &&
           seed == o.seed;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

const std::vector<std::string> &csv_columns() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &c : columns()) {
            v.emplace_back(c.name);
        }
        return v;
    }();
    return names;
}

std::string csv_header() {
    std::string s;
    for (const auto &name : csv_columns()) {
        s += (s.empty() ? "" : ",") + name;
    }
    return s;
}

std::string format_row(const SweepRow &row) {
    std::string s;
    bool first = true;
    for (const auto &c : columns()) {
        if (!first) {
            s += ',';
        }
        first = false;
        s += c.get(row);
    }
    return s;
}

SweepRow parse_row(std::string_view line) {
    const auto fields = split_commas(line);
    const auto &cols = columns();
    if (fields.size() != cols.size()) {
        throw ParseError("", "expected " + std::to_string(cols.size()) + " fields, got " +
                                 std::to_string(fields.size()));
    }
    SweepRow row;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        try {
            cols[i].set(row, fields[i]);
        } catch (const ParseError &e) {
            throw ParseError(cols[i].name, e.what());
        }
    }
    return row;
}

std::string row_field(const SweepRow &row, std::string_view column) {
    for (const auto &c : columns()) {
        if (column == c.name) {
            return c.get(row);
        }
    }
    throw ParseError("", "unknown column '" + std::string(column) + "'");
}

std::optional<std::string> CsvTable::meta(std::string_view key) const {
    for (const auto &[k, v] : metadata) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

CsvTable parse_csv(std::string_view text) {
    CsvTable table;
    bool header_seen = false;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            table.truncated_tail = true;
            break;
        }
        ++line_no;
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.starts_with('#')) {
            line.remove_prefix(1);
            const std::size_t colon = line.find(':');
            auto trim = [](std::string_view s) {
                while (!s.empty() && s.front() == ' ') {
                    s.remove_prefix(1);
                }
                while (!s.empty() && s.back() == ' ') {
                    s.remove_suffix(1);
                }
                return std::string(s);
            };
            if (colon == std::string_view::npos) {
                table.metadata.emplace_back(trim(line), "");
            } else {
                table.metadata.emplace_back(trim(line.substr(0, colon)),
                                            trim(line.substr(colon + 1)));
            }
        } else if (!header_seen) {
            if (line != csv_header()) {
                throw ParseError("line " + std::to_string(line_no), "unexpected CSV header");
            }
            header_seen = true;
        } else if (!line.empty()) {
            try {
                table.rows.push_back(parse_row(line));
            } catch (const ParseError &e) {
                throw ParseError("line " + std::to_string(line_no), e.what());
            }
        }
        pos = nl + 1;
        table.complete_bytes = pos;
    }
    if (!header_seen && !table.rows.empty()) {
        throw ParseError("", "missing CSV header");
    }
    return table;
}

CsvTable read_csv(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open CSV file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

} // namespace plateau
