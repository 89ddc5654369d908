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
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plateau/harness/csv.hpp"

namespace plateau {

struct DecayFit {
    /// ln Var = intercept - rate * n.
    double rate = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t n_points = 0;
    std::size_t excluded = 0;
};

/// Points are (n, variance). Nonpositive variances are dropped with a
/// warning on `warn`; fewer than 3 usable points or a single distinct n
/// throws DomainError.
[[nodiscard]] DecayFit fit_exponential_decay(std::span<const std::pair<double, double>> points,
                                             std::ostream *warn = nullptr);
[[nodiscard]] DecayFit fit_exponential_decay(const std::vector<SweepRow> &rows,
                                             std::ostream *warn = nullptr);

/// Comma-separated column=value pairs. Values compare numerically when
/// both sides parse as numbers.
class RowFilter {
  public:
    static RowFilter parse(std::string_view text);
    [[nodiscard]] bool matches(const SweepRow &row) const;
    [[nodiscard]] std::vector<SweepRow> apply(const std::vector<SweepRow> &rows) const;

  private:
    std::vector<std::pair<std::string, std::string>> terms_;
};

[[nodiscard]] double spearman_rank_correlation(std::span<const double> x,
                                               std::span<const double> y);

} // namespace plateau
