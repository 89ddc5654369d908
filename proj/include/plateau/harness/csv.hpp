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


#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plateau {

struct SweepRow {
    std::string experiment;
    std::size_t n = 0;
    std::size_t depth = 0;
    std::string scheme;
    std::string axes;
    double r = 1.0;
    std::size_t target_layer = 0;
    std::size_t target_qubit = 0;
    std::string cost;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;

    std::optional<double> mean, mean_stderr, variance, variance_stderr;
    std::optional<double> f_rho, f_rho_stderr, f_h, f_h_stderr;
    std::optional<double> ratio_rho, ratio_h, eps_rho, eps_h;
    std::optional<double> bound_r, bound_l, bound_rl;
    std::optional<double> slack_r, slack_l, slack_rl;
    std::optional<double> wall_ms;

    /// Same grid coordinates and seed; results are not compared.
    [[nodiscard]] bool same_cell(const SweepRow &other) const noexcept;
    friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

[[nodiscard]] const std::vector<std::string> &csv_columns();
[[nodiscard]] std::string csv_header();
/// No trailing newline.
[[nodiscard]] std::string format_row(const SweepRow &row);
/// Throws ParseError on a malformed line.
[[nodiscard]] SweepRow parse_row(std::string_view line);

/// Text of one column as written to the CSV, or empty for an unset value.
[[nodiscard]] std::string row_field(const SweepRow &row, std::string_view column);

/// 17 significant digits, enough for an exact double round trip.
[[nodiscard]] std::string format_double(double value);

struct CsvTable {
    /// `# key: value` comment lines in file order.
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<SweepRow> rows;
    /// Bytes up to the end of the last complete line.
    std::size_t complete_bytes = 0;
    bool truncated_tail = false;

    [[nodiscard]] std::optional<std::string> meta(std::string_view key) const;
};

/// Throws IoError if unreadable and ParseError on a bad header or row.
/// An unterminated final line is dropped and reported in truncated_tail.
[[nodiscard]] CsvTable read_csv(const std::string &path);
[[nodiscard]] CsvTable parse_csv(std::string_view text);

} // namespace plateau
