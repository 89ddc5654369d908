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


#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "plateau/errors.hpp"
#include "plateau/harness/cli.hpp"
#include "plateau/harness/config.hpp"
#include "plateau/harness/csv.hpp"
#include "plateau/harness/fit.hpp"
#include "plateau/harness/sweep.hpp"
#include "plateau/rng.hpp"

namespace plateau {
namespace {

namespace fs = std::filesystem;

class TempDir {
  public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("plateau_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                 "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    [[nodiscard]] std::string file(const std::string &name) const { return (path_ / name).string(); }

  private:
    fs::path path_;
};

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string without_created(const std::string &text) {
    std::string out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.starts_with("# created:")) {
            out += line + "\n";
        }
    }
    return out;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream(path, std::ios::binary) << text;
}

int run_cli(const std::vector<std::string> &args, std::string *out = nullptr,
            std::string *err = nullptr) {
    std::ostringstream o;
    std::ostringstream e;
    const int code = cli_main(args, o, e);
    if (out != nullptr) {
        *out = o.str();
    }
    if (err != nullptr) {
        *err = e.str();
    }
    return code;
}

const char *kSmallSweep = R"(
experiment: variance-vs-n
grid:
  n: [2, 3]
  depth: [3, 6]
  scheme: [independent, correlate-all]
  target: first
cost: global
n_samples: 50
seed: 21
)";

// ---------------------------------------------------------------- config

TEST(Config, Defaults) {
    const auto cfg = parse_config("experiment: variance-vs-depth\n");
    EXPECT_EQ(cfg.kind, ExperimentKind::VarianceVsDepth);
    EXPECT_EQ(cfg.n_samples, 1000U);
    EXPECT_EQ(cfg.n_pairs, 5000U);
    EXPECT_EQ(cfg.initial_state.kind, InitialStateKind::TiltedProduct);
    EXPECT_FALSE(cfg.record_wall_time);
    EXPECT_EQ(cfg.cell_count(), 1U);
}

TEST(Config, GridForms) {
    const auto cfg = parse_config(R"(
experiment: axis-restriction
grid:
  n: 4
  depth: [2, 5]
  scheme: [independent, correlate-layers]
  axes: [xyz, x, yz]
  r: [0.1, 1]
  target: [first, mid, last, [1, 2], {layer: mid, qubit: 3}]
cost: {local: 3}
)");
    EXPECT_EQ(cfg.n_values, std::vector<std::size_t>{4});
    ASSERT_EQ(cfg.axes.size(), 3U);
    EXPECT_EQ(axes_label(cfg.axes[2]), "yz");
    ASSERT_EQ(cfg.targets.size(), 5U);
    EXPECT_EQ(cfg.targets[0].resolve(5), (Slot{0, 0}));
    EXPECT_EQ(cfg.targets[1].resolve(5), (Slot{2, 0}));
    EXPECT_EQ(cfg.targets[2].resolve(5), (Slot{4, 0}));
    EXPECT_EQ(cfg.targets[3].resolve(5), (Slot{1, 2}));
    EXPECT_EQ(cfg.targets[4].resolve(5), (Slot{2, 3}));
    EXPECT_EQ(cfg.cost.label(), "local-3");
    EXPECT_EQ(cfg.cell_count(), 1U * 2 * 2 * 3 * 2 * 5);
}

TEST(Config, SinglePairTarget) {
    const auto cfg = parse_config("experiment: variance-vs-n\ngrid:\n  depth: 4\n  target: [2, 1]\n");
    ASSERT_EQ(cfg.targets.size(), 1U);
    EXPECT_EQ(cfg.targets[0].resolve(4), (Slot{2, 1}));
}

TEST(Config, CustomCost) {
    const auto cfg = parse_config(R"(
experiment: variance-vs-n
grid: {n: [2, 3]}
cost:
  custom:
    - {pauli: "Z0 Z1", coefficient: 0.5}
    - {pauli: "X1", state: all-zero}
)");
    const CostSpec spec = cfg.cost.build(3, cfg.initial_state);
    ASSERT_EQ(spec.terms.size(), 2U);
    EXPECT_EQ(spec.terms[0].state.kind, InitialStateKind::TiltedProduct);
    EXPECT_EQ(spec.terms[1].state.kind, InitialStateKind::AllZero);
    EXPECT_DOUBLE_EQ(spec.terms[0].observable.hs_norm_squared(), 8 * 0.25);
}

void expect_parse_error(const std::string &text, const std::string &path_fragment) {
    try {
        (void)parse_config(text, "t.yaml");
        ADD_FAILURE() << "no error for:\n" << text;
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find(path_fragment), std::string::npos) << e.what();
    }
}

TEST(Config, ErrorsNameTheField) {
    expect_parse_error("grid: {n: 2}\n", "experiment");
    expect_parse_error("experiment: nope\n", "experiment");
    expect_parse_error("experiment: variance-vs-n\nsamples: 3\n", "samples");
    expect_parse_error("experiment: variance-vs-n\ngrid: {n: [2, -1]}\n", "grid.n[1]");
    expect_parse_error("experiment: variance-vs-n\ngrid: {scheme: [independent, bogus]}\n",
                       "grid.scheme[1]");
    expect_parse_error("experiment: variance-vs-n\ngrid: {axes: [xx]}\n", "grid.axes");
    expect_parse_error("experiment: variance-vs-n\ngrid: {n: 2}\ncost: {local: 3}\n", "cost.local");
    expect_parse_error("experiment: variance-vs-n\ngrid: {r: [0]}\n", "grid.r[0]");
    expect_parse_error("experiment: variance-vs-n\ngrid: {depth: 2, target: [5, 0]}\n",
                       "grid.target[0]");
    expect_parse_error("experiment: variance-vs-n\ncost: {custom: [{pauli: Q1}]}\n",
                       "cost.custom[0].pauli");
    expect_parse_error("experiment: variance-vs-n\nresample_axes: maybe\n", "resample_axes");
    expect_parse_error("experiment: bound-verification\ngrid: {n: 8}\n", "dense_cap");
    expect_parse_error("experiment: [unclosed\n", "t.yaml");
}

TEST(Config, MissingFileNamed) {
    try {
        (void)load_config("/nonexistent/dir/missing.toml");
        FAIL();
    } catch (const IoError &e) {
        EXPECT_NE(std::string(e.what()).find("missing.toml"), std::string::npos);
    }
}

TEST(Config, HashTracksResults) {
    const auto a = parse_config(kSmallSweep);
    auto b = a;
    EXPECT_EQ(a.hash(), b.hash());
    EXPECT_EQ(a.hash().size(), 16U);
    b.output = "elsewhere.csv";
    b.threads = 7;
    EXPECT_EQ(a.hash(), b.hash());
    b.seed += 1;
    EXPECT_NE(a.hash(), b.hash());
    b = a;
    b.r_values = {0.5};
    EXPECT_NE(a.hash(), b.hash());
}

TEST(Config, ShippedConfigsLoad) {
    std::size_t count = 0;
    for (const auto &entry : fs::directory_iterator(fs::path(PLATEAU_SOURCE_DIR) / "configs")) {
        if (entry.path().extension() != ".yaml") {
            continue;
        }
        SCOPED_TRACE(entry.path().string());
        const auto cfg = load_config(entry.path().string());
        EXPECT_FALSE(cfg.output.empty());
        EXPECT_GE(cfg.cell_count(), 1U);
        ++count;
    }
    EXPECT_GE(count, 8U);
}

// ---------------------------------------------------------------- grid

TEST(Grid, CartesianProductInOrder) {
    const auto cfg = parse_config(kSmallSweep);
    const auto cells = expand_grid(cfg);
    ASSERT_EQ(cells.size(), 8U);
    EXPECT_EQ(cells[0].n, 2U);
    EXPECT_EQ(cells[0].scheme, CorrelationScheme::Independent);
    EXPECT_EQ(cells[1].scheme, CorrelationScheme::CorrelateAll);
    EXPECT_EQ(cells[2].depth, 6U);
    EXPECT_EQ(cells[4].n, 3U);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        EXPECT_EQ(cells[i].index, i);
        EXPECT_EQ(cells[i].seed, derive_seed(21, i));
    }
}

TEST(Grid, RandomBaseSharedAcrossRange) {
    auto cfg = parse_config(
        "experiment: angle-restriction\ngrid: {n: 3, depth: 4, r: [0.1, 1]}\nbase_point: random\n");
    const auto cells = expand_grid(cfg);
    const auto a = cell_ansatz(cfg, cells[0]);
    const auto b = cell_ansatz(cfg, cells[1]);
    EXPECT_EQ(a.angles.base_point, b.angles.base_point);
    EXPECT_EQ(a.angles.range_fraction, 0.1);
    EXPECT_EQ(b.angles.range_fraction, 1.0);
    ASSERT_EQ(a.angles.base_point.size(), 12U);
}

// ---------------------------------------------------------------- csv

TEST(Csv, ColumnOrder) {
    EXPECT_EQ(csv_header(),
              "experiment,n,depth,scheme,axes,r,target_layer,target_qubit,cost,n_samples,seed,"
              "mean,mean_stderr,variance,variance_stderr,f_rho,f_rho_stderr,f_h,f_h_stderr,"
              "ratio_rho,ratio_h,eps_rho,eps_h,bound_r,bound_l,bound_rl,slack_r,slack_l,"
              "slack_rl,wall_ms");
}

TEST(Csv, RoundTripIsLossless) {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        SweepRow row;
        row.experiment = "expressibility-correlation";
        row.n = rng.below(20);
        row.depth = rng.below(200);
        row.scheme = "correlate-layers";
        row.axes = "xz";
        row.r = rng.uniform();
        row.target_layer = rng.below(100);
        row.target_qubit = rng.below(10);
        row.cost = "local-2";
        row.n_samples = 1000;
        row.seed = rng.next_u64();
        const double specials[] = {0.0, 5e-324, 1e-300, -1.7976931348623157e308,
                                   std::numbers::pi, 1.0 / 3.0, INFINITY};
        row.mean = rng.normal() * std::pow(10.0, rng.uniform(-30, 30));
        row.variance = specials[trial % 7];
        row.variance_stderr = rng.uniform();
        if (trial % 2) {
            row.slack_rl = -rng.uniform();
            row.wall_ms = rng.uniform(0, 1e6);
        }
        const SweepRow back = parse_row(format_row(row));
        EXPECT_EQ(back, row) << format_row(row);
    }
}

TEST(Csv, BadRows) {
    EXPECT_THROW((void)parse_row("a,b,c"), ParseError);
    SweepRow row;
    std::string line = format_row(row);
    line.replace(line.find(",0,"), 3, ",x,");
    EXPECT_THROW((void)parse_row(line), ParseError);
    EXPECT_THROW((void)row_field(row, "nope"), ParseError);
}

TEST(Csv, TruncatedTail) {
    SweepRow row;
    const std::string body = "# k: v\n" + csv_header() + "\n" + format_row(row) + "\n";
    const auto t = parse_csv(body + "abc,1");
    EXPECT_TRUE(t.truncated_tail);
    EXPECT_EQ(t.complete_bytes, body.size());
    ASSERT_EQ(t.rows.size(), 1U);
    EXPECT_EQ(t.meta("k"), "v");
}

// ---------------------------------------------------------------- fit

TEST(Fit, ExactExponential) {
    std::vector<std::pair<double, double>> pts;
    for (int n = 2; n <= 10; ++n) {
        pts.emplace_back(n, std::pow(2.0, -n));
    }
    const auto f = fit_exponential_decay(pts);
    EXPECT_NEAR(f.rate, std::numbers::ln2, 1e-12);
    EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
    EXPECT_EQ(f.n_points, 9U);
}

TEST(Fit, Constant) {
    const std::vector<std::pair<double, double>> pts{{2, 0.3}, {3, 0.3}, {4, 0.3}};
    const auto f = fit_exponential_decay(pts);
    EXPECT_EQ(f.rate, 0.0);
    EXPECT_NEAR(f.intercept, std::log(0.3), 1e-15);
    EXPECT_GE(f.r_squared, 0.0);
    EXPECT_LE(f.r_squared, 1.0);
}

TEST(Fit, TwoDesignCurveDecaysAtLn2) {
    std::vector<std::pair<double, double>> pts;
    for (int n = 2; n <= 8; ++n) {
        const double d = std::ldexp(1.0, n);
        pts.emplace_back(n, 2 * d * d / ((d + 1) * (d * d - 1)));
    }
    const auto f = fit_exponential_decay(pts);
    EXPECT_NEAR(f.rate, std::numbers::ln2, 0.1 * std::numbers::ln2);
}

TEST(Fit, NonpositiveExcludedWithWarning) {
    std::ostringstream warn;
    const std::vector<std::pair<double, double>> pts{{2, 0.5}, {3, 0.0}, {4, 0.125}, {5, -1}, {6, 1.0 / 32}};
    const auto f = fit_exponential_decay(pts, &warn);
    EXPECT_EQ(f.excluded, 2U);
    EXPECT_EQ(f.n_points, 3U);
    EXPECT_NEAR(f.rate, std::numbers::ln2, 1e-12);
    EXPECT_NE(warn.str().find("n=3"), std::string::npos);
    const std::vector<std::pair<double, double>> few{{2, 0.5}, {3, 0.0}, {4, 0.1}};
    EXPECT_THROW((void)fit_exponential_decay(few), DomainError);
    const std::vector<std::pair<double, double>> same_n{{2, 0.5}, {2, 0.4}, {2, 0.1}};
    EXPECT_THROW((void)fit_exponential_decay(same_n), DomainError);
}

TEST(Fit, RSquaredInUnitInterval) {
    Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::pair<double, double>> pts;
        for (int n = 2; n < 8; ++n) {
            pts.emplace_back(n, std::exp(rng.normal() * 3));
        }
        const auto f = fit_exponential_decay(pts);
        EXPECT_GE(f.r_squared, 0.0);
        EXPECT_LE(f.r_squared, 1.0);
    }
}

TEST(Fit, RowFilter) {
    SweepRow a;
    a.cost = "global";
    a.depth = 150;
    a.r = 0.1;
    SweepRow b = a;
    b.cost = "local-2";
    const auto f = RowFilter::parse("cost=global,depth=150.0,r=0.1");
    EXPECT_TRUE(f.matches(a));
    EXPECT_FALSE(f.matches(b));
    EXPECT_EQ(RowFilter::parse("").apply({a, b}).size(), 2U);
    EXPECT_THROW((void)RowFilter::parse("bogus=1"), ParseError);
    EXPECT_THROW((void)RowFilter::parse("depth"), ParseError);
}

TEST(Fit, Spearman) {
    const std::vector<double> x{1, 2, 3, 4, 5};
    const std::vector<double> y{10, 20, 30, 40, 1000};
    const std::vector<double> z{5, 4, 3, 2, 1};
    EXPECT_NEAR(spearman_rank_correlation(x, y), 1.0, 1e-15);
    EXPECT_NEAR(spearman_rank_correlation(x, z), -1.0, 1e-15);
    const std::vector<double> p{1, 2, 3, 4};
    const std::vector<double> q{2, 2, 1, 3};
    // Centered ranks (-1.5,-0.5,0.5,1.5) and (0,0,-1.5,1.5): sxy = 1.5, sxx = 5, syy = 4.5.
    EXPECT_NEAR(spearman_rank_correlation(p, q), 1.5 / std::sqrt(5 * 4.5), 1e-15);
    EXPECT_THROW((void)spearman_rank_correlation(p, std::vector<double>{1, 1, 1, 1}), DomainError);
}

// ---------------------------------------------------------------- runs

TEST(Run, DeterministicAndComplete) {
    TempDir dir;
    auto cfg = parse_config(kSmallSweep);
    cfg.output = dir.file("a.csv");
    const auto r1 = run_experiment(cfg);
    EXPECT_EQ(r1.rows.size(), cfg.cell_count());
    const std::string first = slurp(cfg.output);
    RunOptions fresh;
    fresh.resume = false;
    fresh.threads = 3;
    const auto r2 = run_experiment(cfg, fresh);
    EXPECT_EQ(without_created(first), without_created(slurp(cfg.output)));
    EXPECT_EQ(r1.rows, r2.rows);
    EXPECT_EQ(read_csv(cfg.output).rows, r1.rows);
    for (const auto &row : r1.rows) {
        EXPECT_TRUE(row.variance.has_value());
        EXPECT_FALSE(row.wall_ms.has_value());
        EXPECT_FALSE(row.f_rho.has_value());
    }
}

TEST(Run, ResumeMatchesUninterrupted) {
    TempDir dir;
    auto cfg = parse_config(kSmallSweep);
    cfg.output = dir.file("full.csv");
    (void)run_experiment(cfg);
    const std::string full = slurp(cfg.output);

    cfg.output = dir.file("part.csv");
    RunOptions part;
    part.max_new_cells = 3;
    const auto p = run_experiment(cfg, part);
    EXPECT_EQ(p.computed, 3U);
    // Simulate a kill in the middle of writing row 4.
    {
        std::ofstream(cfg.output, std::ios::app | std::ios::binary) << "variance-vs-n,3,6,ind";
    }
    const auto rest = run_experiment(cfg);
    EXPECT_EQ(rest.skipped, 3U);
    EXPECT_EQ(rest.computed, cfg.cell_count() - 3);
    EXPECT_EQ(without_created(slurp(cfg.output)), without_created(full));

    const auto again = run_experiment(cfg);
    EXPECT_EQ(again.computed, 0U);
}

TEST(Run, RefusesForeignCsv) {
    TempDir dir;
    auto cfg = parse_config(kSmallSweep);
    cfg.output = dir.file("a.csv");
    RunOptions part;
    part.max_new_cells = 1;
    (void)run_experiment(cfg, part);
    cfg.seed += 1;
    EXPECT_THROW((void)run_experiment(cfg), IoError);
    RunOptions fresh;
    fresh.resume = false;
    EXPECT_NO_THROW((void)run_experiment(cfg, fresh));
}

TEST(Run, UnwritableOutputFailsBeforeSimulating) {
    TempDir dir;
    write_file(dir.file("blocker"), "x");
    // Far too expensive to simulate, so a late failure would hang the test.
    auto cfg = parse_config("experiment: variance-vs-n\ngrid: {n: 20, depth: 5000}\nn_samples: 100000\n");
    cfg.output = dir.file("blocker") + "/sub/out.csv";
    EXPECT_THROW((void)run_experiment(cfg), IoError);
}

TEST(Run, WallTimeRecordedOnRequest) {
    auto cfg = parse_config("experiment: variance-vs-n\ngrid: {n: 2, depth: 2}\nn_samples: 10\nrecord_wall_time: true\n");
    const auto r = run_experiment(cfg);
    ASSERT_TRUE(r.rows[0].wall_ms.has_value());
    EXPECT_GE(*r.rows[0].wall_ms, 0.0);
}

TEST(Run, GlobalVarianceDecreasesWithN) {
    const auto cfg = parse_config(R"(
experiment: variance-vs-n
grid: {n: [2, 3, 4, 5, 6], depth: 150}
cost: global
seed: 31
)");
    const auto r = run_experiment(cfg);
    ASSERT_EQ(r.rows.size(), 5U);
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        EXPECT_LT(*r.rows[i].variance, *r.rows[i - 1].variance) << i;
    }
}

TEST(Run, ExpressibilityColumns) {
    const auto cfg = parse_config(R"(
experiment: expressibility-correlation
grid: {n: 3, depth: [2, 30]}
cost: {local: 2}
n_samples: 200
n_pairs: 400
seed: 4
)");
    const auto r = run_experiment(cfg);
    ASSERT_EQ(r.rows.size(), 2U);
    for (const auto &row : r.rows) {
        ASSERT_TRUE(row.ratio_h && row.ratio_rho && row.eps_h && row.f_h_stderr);
        EXPECT_GT(*row.ratio_h, 0.5);
        EXPECT_GE(*row.eps_rho, 0.0);
        EXPECT_FALSE(row.bound_r.has_value());
    }
    EXPECT_GT(*r.rows[0].ratio_h, *r.rows[1].ratio_h);
}

TEST(Run, BoundVerificationRow) {
    const auto cfg = parse_config(R"(
experiment: bound-verification
grid: {n: 2, depth: 2}
cost: {local: 2}
n_samples: 300
n_pairs: 500
n_inner: 300
seed: 5
)");
    const auto r = run_experiment(cfg);
    ASSERT_EQ(r.rows.size(), 1U);
    const auto &row = r.rows[0];
    ASSERT_TRUE(row.bound_r && row.bound_l && row.bound_rl && row.slack_rl);
    EXPECT_DOUBLE_EQ(*row.slack_r, *row.bound_r - *row.variance);
    EXPECT_TRUE(r.checks_passed);
}

TEST(Run, HaarIdentityCheckAtDim4) {
    const auto cfg = parse_config(
        "experiment: haar-identity-check\ngrid: {n: 2}\nidentity_tuples: 1\nn_samples: 100000\nseed: 3\n");
    const auto r = run_experiment(cfg);
    ASSERT_EQ(r.rows.size(), 1U);
    EXPECT_TRUE(r.checks_passed);
    EXPECT_EQ(r.rows[0].cost, "haar-identities");
    EXPECT_LE(*r.rows[0].mean, 5.0);
    EXPECT_LE(*r.rows[0].variance, 0.01);
}

// ---------------------------------------------------------------- cli

TEST(Cli, MissingConfig) {
    std::string err;
    EXPECT_EQ(run_cli({"run", "missing.toml"}, nullptr, &err), kExitUsage);
    EXPECT_NE(err.find("missing.toml"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}), kExitUsage);
    EXPECT_EQ(run_cli({"frobnicate"}), kExitUsage);
    EXPECT_EQ(run_cli({"verify-identities", "--bogus"}), kExitUsage);
    EXPECT_EQ(run_cli({"fit"}), kExitUsage);
    std::string out;
    EXPECT_EQ(run_cli({"--help"}, &out), kExitOk);
    EXPECT_NE(out.find("verify-bounds"), std::string::npos);
}

TEST(Cli, VerifyIdentities) {
    std::string out;
    EXPECT_EQ(run_cli({"verify-identities", "--dim", "4", "--samples", "100000", "--seed", "7"}, &out),
              kExitOk);
    std::istringstream in(out);
    int lines = 0;
    for (std::string line; std::getline(in, line); ++lines) {
        EXPECT_NE(line.find("PASS"), std::string::npos) << line;
    }
    EXPECT_EQ(lines, 4);
}

TEST(Cli, RunFitReport) {
    TempDir dir;
    write_file(dir.file("c.yaml"), "experiment: variance-vs-n\ngrid: {n: [2, 3, 4, 5], depth: 40}\n"
                                   "cost: global\nn_samples: 200\nseed: 2\n");
    const std::string csv = dir.file("out.csv");
    std::string out;
    ASSERT_EQ(run_cli({"run", dir.file("c.yaml"), "--out", csv, "--seed", "3", "--samples", "150"}, &out),
              kExitOk);
    const auto table = read_csv(csv);
    ASSERT_EQ(table.rows.size(), 4U);
    EXPECT_EQ(table.rows[0].n_samples, 150U);
    EXPECT_EQ(table.meta("seed"), "3");
    ASSERT_EQ(run_cli({"fit", csv, "--curve", "cost=global,scheme=independent,depth=40"}, &out),
              kExitOk);
    EXPECT_NE(out.find("rate "), std::string::npos);
    EXPECT_NE(out.find("intercept "), std::string::npos);
    EXPECT_NE(out.find("r_squared "), std::string::npos);
    ASSERT_EQ(run_cli({"report", csv}, &out), kExitOk);
    EXPECT_NE(out.find("4 rows"), std::string::npos);
    EXPECT_EQ(run_cli({"fit", csv, "--curve", "depth=41"}), kExitUsage);
    EXPECT_EQ(run_cli({"verify-bounds", dir.file("c.yaml")}), kExitUsage);
}

TEST(Cli, VerifyBounds) {
    TempDir dir;
    write_file(dir.file("b.yaml"), "experiment: bound-verification\ngrid: {n: 2, depth: [2, 8]}\n"
                                   "cost: global\nn_samples: 300\nn_pairs: 500\nn_inner: 300\n");
    std::string out;
    EXPECT_EQ(run_cli({"verify-bounds", dir.file("b.yaml")}, &out), kExitOk);
    EXPECT_NE(out.find("slack_rl="), std::string::npos);
    EXPECT_NE(out.find("PASS"), std::string::npos);
}

} // namespace
} // namespace plateau
