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


#include "plateau/harness/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>

#include "plateau/errors.hpp"
#include "plateau/expressibility/haar_identities.hpp"
#include "plateau/harness/config.hpp"
#include "plateau/harness/csv.hpp"
#include "plateau/harness/fit.hpp"
#include "plateau/harness/sweep.hpp"

namespace plateau {

namespace {

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<std::string> out;
    std::size_t threads = 0;
    bool fresh = false;

    void attach(CLI::App *cmd) {
        cmd->add_option("--seed", seed, "Override the config seed");
        cmd->add_option("--samples", samples, "Override n_samples");
        cmd->add_option("--out", out, "Override the output path");
        cmd->add_option("--threads", threads, "Worker threads (default PLATEAU_THREADS or all cores)");
        cmd->add_flag("--fresh", fresh, "Overwrite the output instead of resuming");
    }

    [[nodiscard]] ExperimentConfig load(const std::string &path) const {
        ExperimentConfig cfg = load_config(path);
        if (seed) {
            cfg.seed = *seed;
        }
        if (samples) {
            cfg.n_samples = *samples;
        }
        if (out) {
            cfg.output = *out;
        }
        cfg.validate();
        return cfg;
    }

    [[nodiscard]] RunOptions run_options(std::ostream &log) const {
        RunOptions o;
        o.resume = !fresh;
        o.threads = threads;
        o.log = &log;
        return o;
    }
};

std::string fmt(const char *spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string opt(const std::optional<double> &v, const char *spec = "%.4g") {
    return v ? fmt(spec, *v) : std::string("-");
}

int cmd_run(const std::string &path, const Overrides &ov, std::ostream &out, std::ostream &err) {
    const ExperimentConfig cfg = ov.load(path);
    const RunResult res = run_experiment(cfg, ov.run_options(err));
    if (cfg.output.empty()) {
        out << csv_header() << '\n';
        for (const auto &r : res.rows) {
            out << format_row(r) << '\n';
        }
    } else {
        out << "wrote " << res.computed << " rows to " << cfg.output << " (" << res.skipped
            << " resumed, " << res.rows.size() << " total)\n";
    }
    if (!res.checks_passed) {
        err << "one or more checks failed\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_verify_bounds(const std::string &path, const Overrides &ov, std::ostream &out,
                      std::ostream &err) {
    const ExperimentConfig cfg = ov.load(path);
    if (cfg.kind != ExperimentKind::BoundVerification) {
        err << path << ": verify-bounds needs experiment: bound-verification\n";
        return kExitUsage;
    }
    const RunResult res = run_experiment(cfg, ov.run_options(err));
    for (const auto &r : res.rows) {
        out << "n=" << r.n << " depth=" << r.depth << " scheme=" << r.scheme
            << " cost=" << r.cost << " target=(" << r.target_layer << "," << r.target_qubit
            << ") var=" << opt(r.variance) << " slack_r=" << opt(r.slack_r)
            << " slack_l=" << opt(r.slack_l) << " slack_rl=" << opt(r.slack_rl) << '\n';
    }
    out << (res.checks_passed ? "PASS" : "FAIL") << ": " << res.computed << " cells checked, "
        << res.skipped << " resumed\n";
    return res.checks_passed ? kExitOk : kExitCheckFailed;
}

int cmd_verify_identities(std::size_t dim, std::size_t samples, std::uint64_t seed,
                          std::size_t tuples, std::ostream &out) {
    const IdentityReport rep = verify_haar_identities(dim, samples, seed, tuples);
    std::map<HaarIdentity, std::pair<double, double>> worst;
    std::map<HaarIdentity, bool> pass;
    for (const auto &c : rep.checks) {
        auto &[z, rel] = worst[c.id];
        z = std::max(z, std::abs(c.monte_carlo - c.analytic) / c.std_error);
        rel = std::max(rel, c.relative_error);
        pass.try_emplace(c.id, true);
        pass[c.id] = pass[c.id] && c.passed();
    }
    for (const auto &[id, w] : worst) {
        char line[160];
        std::snprintf(line, sizeof line, "%-14s %s  d=%zu  max|z|=%.3f  max_rel=%.3e",
                      identity_name(id).c_str(), pass[id] ? "PASS" : "FAIL", dim, w.first,
                      w.second);
        out << line << '\n';
    }
    return rep.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_fit(const std::string &path, const std::string &curve, std::ostream &out,
            std::ostream &err) {
    const CsvTable table = read_csv(path);
    const auto rows = RowFilter::parse(curve).apply(table.rows);
    const DecayFit fit = fit_exponential_decay(rows, &err);
    out << "rate " << format_double(fit.rate) << '\n'
        << "intercept " << format_double(fit.intercept) << '\n'
        << "r_squared " << format_double(fit.r_squared) << '\n'
        << "points " << fit.n_points << " (excluded " << fit.excluded << ")\n";
    return kExitOk;
}

int cmd_report(const std::string &path, std::ostream &out) {
    const CsvTable table = read_csv(path);
    char line[400];
    std::snprintf(line, sizeof line, "%-26s %3s %5s %-17s %-4s %-7s %-9s %-9s %-12s %-10s %-10s %-10s %-10s %-10s %-10s",
                  "experiment", "n", "depth", "scheme", "axes", "r", "target", "cost",
                  "variance", "stderr", "ratio_rho", "ratio_h", "slack_r", "slack_l",
                  "slack_rl");
    out << line << '\n';
    for (const auto &r : table.rows) {
        const std::string target =
            "(" + std::to_string(r.target_layer) + "," + std::to_string(r.target_qubit) + ")";
        std::snprintf(line, sizeof line,
                      "%-26s %3zu %5zu %-17s %-4s %-7.4g %-9s %-9s %-12s %-10s %-10s %-10s %-10s %-10s %-10s",
                      r.experiment.c_str(), r.n, r.depth, r.scheme.c_str(), r.axes.c_str(), r.r,
                      target.c_str(), r.cost.c_str(), opt(r.variance, "%.5e").c_str(),
                      opt(r.variance_stderr, "%.2e").c_str(), opt(r.ratio_rho).c_str(),
                      opt(r.ratio_h).c_str(), opt(r.slack_r, "%.2e").c_str(),
                      opt(r.slack_l, "%.2e").c_str(), opt(r.slack_rl, "%.2e").c_str());
        out << line << '\n';
    }
    out << table.rows.size() << " rows\n";
    return kExitOk;
}

} // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Variance and expressibility experiments for layered circuits", "plateau"};
    app.require_subcommand(1);

    std::string path;
    Overrides ov;
    auto *run = app.add_subcommand("run", "Run the sweep described by a config file");
    run->add_option("config", path, "Config file")->required();
    ov.attach(run);

    std::string curve;
    auto *fit = app.add_subcommand("fit", "Fit ln(variance) against n for one curve of a CSV");
    fit->add_option("csv", path, "Sweep CSV")->required();
    fit->add_option("--curve", curve, "Row filter, column=value[,column=value...]");

    std::size_t dim = 4;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::size_t tuples = 1;
    auto *vi = app.add_subcommand("verify-identities", "Check the Haar moment identities");
    vi->add_option("--dim", dim, "Hilbert-space dimension")->check(CLI::Range(1, 64));
    vi->add_option("--samples", samples, "Monte-Carlo samples")->check(CLI::Range(2, 100000000));
    vi->add_option("--seed", seed, "Seed");
    vi->add_option("--tuples", tuples, "Random operand tuples")->check(CLI::Range(1, 1000));

    auto *vb = app.add_subcommand("verify-bounds", "Check the variance bounds over a config grid");
    vb->add_option("config", path, "Config file")->required();
    ov.attach(vb);

    auto *rep = app.add_subcommand("report", "Print a summary table of a sweep CSV");
    rep->add_option("csv", path, "Sweep CSV")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        (void)app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            return cmd_run(path, ov, out, err);
        }
        if (fit->parsed()) {
            return cmd_fit(path, curve, out, err);
        }
        if (vi->parsed()) {
            return cmd_verify_identities(dim, samples, seed, tuples, out);
        }
        if (vb->parsed()) {
            return cmd_verify_bounds(path, ov, out, err);
        }
        return cmd_report(path, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace plateau
