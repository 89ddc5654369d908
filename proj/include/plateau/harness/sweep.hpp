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
#include <limits>
#include <ostream>
#include <vector>

#include "plateau/ansatz/ansatz.hpp"
#include "plateau/harness/config.hpp"
#include "plateau/harness/csv.hpp"

namespace plateau {

inline constexpr const char *kHarnessVersion = "0.1.0";

struct Cell {
    std::size_t index = 0;
    std::size_t n = 0;
    std::size_t depth = 0;
    CorrelationScheme scheme = CorrelationScheme::Independent;
    std::vector<Axis> axes;
    double r = 1.0;
    Slot target;
    /// derive_seed(config seed, index).
    std::uint64_t seed = 0;
};

[[nodiscard]] std::vector<Cell> expand_grid(const ExperimentConfig &config);
[[nodiscard]] AnsatzSpec cell_ansatz(const ExperimentConfig &config, const Cell &cell);

/// Row with coordinates filled and no results.
[[nodiscard]] SweepRow cell_row(const ExperimentConfig &config, const Cell &cell);

struct CellResult {
    SweepRow row;
    /// Bound or identity checks; always true for the other kinds.
    bool passed = true;
};

[[nodiscard]] CellResult run_cell(const ExperimentConfig &config, const Cell &cell,
                                  std::size_t threads = 1);

struct RunOptions {
    /// Continue a matching partial CSV instead of starting over.
    bool resume = true;
    std::size_t threads = 0;
    /// Stop after this many newly computed cells.
    std::size_t max_new_cells = std::numeric_limits<std::size_t>::max();
    std::ostream *log = nullptr;
};

struct RunResult {
    std::vector<SweepRow> rows;
    std::size_t skipped = 0;
    std::size_t computed = 0;
    /// Over the cells computed in this run.
    bool checks_passed = true;
};

/// Writes to config.output when it is non-empty. The output is opened
/// before any cell runs, so an unwritable path fails with IoError up front.
[[nodiscard]] RunResult run_experiment(const ExperimentConfig &config,
                                       const RunOptions &options = {});

} // namespace plateau
