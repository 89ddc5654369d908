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


#include "plateau/harness/sweep.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>

#include "plateau/bounds/bounds.hpp"
#include "plateau/errors.hpp"
#include "plateau/expressibility/frame_potential.hpp"
#include "plateau/expressibility/haar_identities.hpp"
#include "plateau/gradients/statistics.hpp"
#include "plateau/parallel.hpp"

namespace plateau {

namespace {

void fill_variance(SweepRow &row, const VarianceReport &v) {
    row.mean = v.mean;
    row.mean_stderr = v.mean_stderr;
    row.variance = v.variance;
    row.variance_stderr = v.variance_stderr;
}

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string metadata_block(const ExperimentConfig &cfg) {
    std::string s;
    s += "# plateau: " + std::string(kHarnessVersion) + "\n";
    s += "# versions: eigen " + std::to_string(EIGEN_WORLD_VERSION) + "." +
         std::to_string(EIGEN_MAJOR_VERSION) + "." + std::to_string(EIGEN_MINOR_VERSION) + "\n";
    s += "# experiment: " + std::string(experiment_kind_name(cfg.kind)) + "\n";
    s += "# config_hash: " + cfg.hash() + "\n";
    s += "# seed: " + std::to_string(cfg.seed) + "\n";
    s += "# cells: " + std::to_string(cfg.cell_count()) + "\n";
    s += "# created: " + utc_timestamp() + "\n";
    return s;
}

// Opens the output for appending, after checking or writing its header.
// Returns rows already present.
std::vector<SweepRow> prepare_output(const ExperimentConfig &cfg, const std::vector<Cell> &cells,
                                     bool resume, std::ofstream &out) {
    namespace fs = std::filesystem;
    const fs::path path(cfg.output);
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
    }
    std::vector<SweepRow> existing;
    const bool have_file = fs::exists(path, ec) && fs::file_size(path, ec) > 0;
    if (resume && have_file) {
        CsvTable table;
        try {
            table = read_csv(cfg.output);
        } catch (const ParseError &e) {
            throw IoError("cannot resume '" + cfg.output + "': " + e.what());
        }
        const auto hash = table.meta("config_hash");
        if (!hash || *hash != cfg.hash()) {
            throw IoError("'" + cfg.output +
                          "' was written by a different config; remove it or run with --fresh");
        }
        if (table.rows.size() > cells.size()) {
            throw IoError("'" + cfg.output + "' has more rows than the grid");
        }
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            if (!table.rows[i].same_cell(cell_row(cfg, cells[i]))) {
                throw IoError("'" + cfg.output + "' row " + std::to_string(i) +
                              " does not match grid cell " + std::to_string(i));
            }
        }
        if (table.truncated_tail) {
            fs::resize_file(path, table.complete_bytes, ec);
            if (ec) {
                throw IoError("cannot truncate '" + cfg.output + "': " + ec.message());
            }
        }
        existing = std::move(table.rows);
        out.open(path, std::ios::binary | std::ios::app);
    } else {
        out.open(path, std::ios::binary | std::ios::trunc);
        if (out) {
            out << metadata_block(cfg) << csv_header() << '\n';
            out.flush();
        }
    }
    if (!out) {
        throw IoError("cannot write output file '" + cfg.output + "'");
    }
    return existing;
}

CellResult identity_cell(const ExperimentConfig &cfg, const Cell &cell, SweepRow row,
                         std::size_t threads) {
    const std::size_t d = std::size_t{1} << cell.n;
    const IdentityReport rep = verify_haar_identities(d, cfg.n_samples, cell.seed,
                                                      cfg.identity_tuples,
                                                      OperandKind::Shifted, threads);
    double max_z = 0.0;
    double max_rel = 0.0;
    for (const auto &c : rep.checks) {
        max_z = std::max(max_z, std::abs(c.monte_carlo - c.analytic) / c.std_error);
        max_rel = std::max(max_rel, c.relative_error);
    }
    row.mean = max_z;
    row.variance = max_rel;
    return {row, rep.passed()};
}

} // namespace

std::vector<Cell> expand_grid(const ExperimentConfig &cfg) {
    std::vector<Cell> cells;
    cells.reserve(cfg.cell_count());
    for (std::size_t n : cfg.n_values) {
        for (std::size_t depth : cfg.depths) {
            for (CorrelationScheme scheme : cfg.schemes) {
                for (const auto &axes : cfg.axes) {
                    for (double r : cfg.r_values) {
                        for (const auto &target : cfg.targets) {
                            Cell c;
                            c.index = cells.size();
                            c.n = n;
                            c.depth = depth;
                            c.scheme = scheme;
                            c.axes = axes;
                            c.r = r;
                            c.target = target.resolve(depth);
                            c.seed = derive_seed(cfg.seed, c.index);
                            cells.push_back(std::move(c));
                        }
                    }
                }
            }
        }
    }
    return cells;
}

AnsatzSpec cell_ansatz(const ExperimentConfig &cfg, const Cell &cell) {
    AnsatzSpec spec;
    spec.n_qubits = cell.n;
    spec.depth = cell.depth;
    spec.scheme = cell.scheme;
    spec.axis_policy.allowed_axes = cell.axes;
    spec.axis_policy.resample_per_sample = cfg.resample_axes;
    spec.axis_policy.layout_seed = cfg.layout_seed;
    spec.angles.range_fraction = cell.r;
    if (cfg.base_point == BasePoint::Random) {
        spec.angles.base_point =
            AngleDistribution::random_base(spec.free_parameter_count(), cfg.base_seed);
    }
    spec.validate();
    return spec;
}

SweepRow cell_row(const ExperimentConfig &cfg, const Cell &cell) {
    SweepRow row;
    row.experiment = experiment_kind_name(cfg.kind);
    row.n = cell.n;
    row.depth = cell.depth;
    row.scheme = scheme_name(cell.scheme);
    row.axes = axes_label(cell.axes);
    row.r = cell.r;
    row.target_layer = cell.target.layer;
    row.target_qubit = cell.target.qubit;
    row.cost = cfg.kind == ExperimentKind::HaarIdentityCheck ? "haar-identities" : cfg.cost.label();
    row.n_samples = cfg.n_samples;
    row.seed = cell.seed;
    return row;
}

CellResult run_cell(const ExperimentConfig &cfg, const Cell &cell, std::size_t threads) {
    const auto start = std::chrono::steady_clock::now();
    SweepRow row = cell_row(cfg, cell);
    CellResult result;
    if (cfg.kind == ExperimentKind::HaarIdentityCheck) {
        result = identity_cell(cfg, cell, row, threads);
    } else {
        const AnsatzSpec spec = cell_ansatz(cfg, cell);
        const CostSpec cost = cfg.cost.build(cell.n, cfg.initial_state);
        if (cfg.kind == ExperimentKind::BoundVerification) {
            BoundRunOptions opt;
            opt.n_samples = cfg.n_samples;
            opt.n_pairs = cfg.n_pairs;
            opt.n_inner = cfg.n_inner;
            opt.dense_cap = cfg.dense_cap;
            opt.gradient = cfg.gradient;
            opt.threads = threads;
            const BoundReport rep = verify_theorem1(cost.terms.front(), spec, cell.target,
                                                    cell.seed, opt);
            fill_variance(row, rep.gradient);
            row.f_rho = rep.expressibility_R.frame_potential.value;
            row.f_rho_stderr = rep.expressibility_R.frame_potential.std_error;
            row.f_h = rep.expressibility_L.frame_potential.value;
            row.f_h_stderr = rep.expressibility_L.frame_potential.std_error;
            row.ratio_rho = rep.expressibility_R.ratio;
            row.ratio_h = rep.expressibility_L.ratio;
            row.eps_rho = rep.eps_R_rho.value;
            row.eps_h = rep.eps_L_H.value;
            row.bound_r = rep.right.bound;
            row.bound_l = rep.left.bound;
            row.bound_rl = rep.both.bound;
            row.slack_r = rep.right.slack;
            row.slack_l = rep.left.slack;
            row.slack_rl = rep.both.slack;
            result.passed = rep.holds();
        } else {
            fill_variance(row, estimate_gradient_statistics(cost, spec, cell.target,
                                                            cfg.n_samples,
                                                            derive_seed(cell.seed, 0),
                                                            cfg.gradient, threads));
            if (cfg.kind == ExperimentKind::ExpressibilityCorrelation) {
                const CostTerm &term = cost.terms.front();
                FrameOptions fwd;
                fwd.dense_cap = cfg.dense_cap;
                fwd.threads = threads;
                const auto er = expressibility_report(
                    FrameOperator::state(term.state.prepare(cell.n)),
                    EnsembleSampler::ansatz(spec, Segment::Right, cell.target), cfg.n_pairs,
                    derive_seed(cell.seed, 1), fwd);
                FrameOptions heis = fwd;
                heis.orientation = Orientation::Heisenberg;
                const auto el = expressibility_report(
                    FrameOperator::observable(term.observable),
                    EnsembleSampler::ansatz(spec, Segment::Left, cell.target), cfg.n_pairs,
                    derive_seed(cell.seed, 2), heis);
                row.f_rho = er.frame_potential.value;
                row.f_rho_stderr = er.frame_potential.std_error;
                row.f_h = el.frame_potential.value;
                row.f_h_stderr = el.frame_potential.std_error;
                row.ratio_rho = er.ratio;
                row.ratio_h = el.ratio;
                row.eps_rho = er.epsilon;
                row.eps_h = el.epsilon;
            }
        }
        result.row = std::move(row);
    }
    if (cfg.record_wall_time) {
        result.row.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    }
    return result;
}

RunResult run_experiment(const ExperimentConfig &cfg, const RunOptions &options) {
    cfg.validate();
    const std::vector<Cell> cells = expand_grid(cfg);
    for (const auto &c : cells) {
        (void)cell_ansatz(cfg, c);
    }

    RunResult result;
    std::ofstream out;
    if (!cfg.output.empty()) {
        result.rows = prepare_output(cfg, cells, options.resume, out);
    }
    result.skipped = result.rows.size();
    if (options.log != nullptr && result.skipped > 0) {
        *options.log << "resuming: " << result.skipped << " of " << cells.size()
                     << " cells already present\n";
    }

    const std::size_t first = result.skipped;
    const std::size_t todo = std::min(cells.size() - first, options.max_new_cells);
    const std::size_t threads = resolve_threads(options.threads ? options.threads : cfg.threads);
    const std::size_t cell_threads = std::min(threads, std::max<std::size_t>(todo, 1));
    const std::size_t inner_threads = std::max<std::size_t>(1, threads / cell_threads);

    // Completed rows wait here until every earlier cell has been written.
    std::vector<std::optional<CellResult>> done(todo);
    std::size_t next_to_write = 0;
    std::mutex mu;
    parallel_for(todo, cell_threads, [&](std::size_t k) {
        CellResult r = run_cell(cfg, cells[first + k], inner_threads);
        std::lock_guard lock(mu);
        done[k] = std::move(r);
        while (next_to_write < todo && done[next_to_write].has_value()) {
            const CellResult &w = *done[next_to_write];
            if (out.is_open()) {
                out << format_row(w.row) << '\n';
                out.flush();
                if (!out) {
                    throw IoError("write failed on '" + cfg.output + "'");
                }
            }
            if (options.log != nullptr) {
                *options.log << "cell " << (first + next_to_write + 1) << "/" << cells.size()
                             << (w.passed ? "" : " [check failed]") << '\n';
            }
            ++next_to_write;
        }
    });
    for (auto &d : done) {
        result.checks_passed = result.checks_passed && d->passed;
        result.rows.push_back(std::move(d->row));
    }
    result.computed = todo;
    return result;
}

} // namespace plateau
