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


#include "plateau/harness/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "plateau/errors.hpp"

namespace plateau {

namespace {

constexpr std::pair<ExperimentKind, std::string_view> kKindNames[] = {
    {ExperimentKind::VarianceVsN, "variance-vs-n"},
    {ExperimentKind::VarianceVsDepth, "variance-vs-depth"},
    {ExperimentKind::CorrelationSchemes, "correlation-schemes"},
    {ExperimentKind::AxisRestriction, "axis-restriction"},
    {ExperimentKind::AngleRestriction, "angle-restriction"},
    {ExperimentKind::ExpressibilityCorrelation, "expressibility-correlation"},
    {ExperimentKind::BoundVerification, "bound-verification"},
    {ExperimentKind::HaarIdentityCheck, "haar-identity-check"},
};

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Field-path aware accessors over a YAML tree.
class Reader {
  public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string &path, const YAML::Node &node,
                           const std::string &message) const {
        std::string where = source_;
        if (node.IsDefined() && node.Mark().line >= 0) {
            where += ":" + std::to_string(node.Mark().line + 1);
        }
        throw ParseError(path, message + " (" + where + ")");
    }

    std::string scalar(const YAML::Node &node, const std::string &path) const {
        if (!node.IsScalar()) {
            fail(path, node, "expected a scalar");
        }
        return node.Scalar();
    }

    std::uint64_t unsigned_int(const YAML::Node &node, const std::string &path) const {
        const std::string s = scalar(node, path);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            fail(path, node, "expected a non-negative integer, got '" + s + "'");
        }
        try {
            return std::stoull(s);
        } catch (const std::exception &) {
            fail(path, node, "integer out of range: '" + s + "'");
        }
    }

    double real(const YAML::Node &node, const std::string &path) const {
        try {
            return node.as<double>();
        } catch (const YAML::Exception &) {
            fail(path, node, "expected a number");
        }
    }

    bool boolean(const YAML::Node &node, const std::string &path) const {
        try {
            return node.as<bool>();
        } catch (const YAML::Exception &) {
            fail(path, node, "expected true or false");
        }
    }

    // A scalar is accepted as a one-element list.
    template <class T, class Fn>
    std::vector<T> list(const YAML::Node &node, const std::string &path, Fn &&item) const {
        std::vector<T> out;
        if (node.IsSequence()) {
            if (node.size() == 0) {
                fail(path, node, "list must not be empty");
            }
            for (std::size_t i = 0; i < node.size(); ++i) {
                out.push_back(item(node[i], path + "[" + std::to_string(i) + "]"));
            }
        } else {
            out.push_back(item(node, path));
        }
        return out;
    }

    template <class Fn> auto named(const YAML::Node &node, const std::string &path, Fn &&parse) const {
        const std::string s = scalar(node, path);
        try {
            return parse(s);
        } catch (const ParseError &e) {
            fail(path, node, e.what());
        }
    }

    void check_keys(const YAML::Node &map, const std::string &path,
                    const std::set<std::string> &allowed) const {
        if (!map.IsMap()) {
            fail(path, map, "expected a mapping");
        }
        for (const auto &kv : map) {
            const std::string key = kv.first.Scalar();
            if (!allowed.contains(key)) {
                fail(path.empty() ? key : path + "." + key, kv.first, "unknown key");
            }
        }
    }

  private:
    std::string source_;
};

TargetChoice parse_target(const Reader &rd, const YAML::Node &node, const std::string &path) {
    TargetChoice t;
    auto layer_from = [&](const YAML::Node &n, const std::string &p) {
        const std::string s = rd.scalar(n, p);
        if (s == "first") {
            t.layer_kind = TargetChoice::Layer::First;
        } else if (s == "mid") {
            t.layer_kind = TargetChoice::Layer::Middle;
        } else if (s == "last") {
            t.layer_kind = TargetChoice::Layer::Last;
        } else {
            t.layer_kind = TargetChoice::Layer::Index;
            t.layer = rd.unsigned_int(n, p);
        }
    };
    if (node.IsScalar()) {
        layer_from(node, path);
        if (t.layer_kind == TargetChoice::Layer::Index) {
            rd.fail(path, node, "a bare target must be first, mid or last");
        }
    } else if (node.IsSequence()) {
        if (node.size() != 2) {
            rd.fail(path, node, "expected [layer, qubit]");
        }
        layer_from(node[0], path + "[0]");
        t.qubit = rd.unsigned_int(node[1], path + "[1]");
    } else if (node.IsMap()) {
        rd.check_keys(node, path, {"layer", "qubit"});
        if (node["layer"]) {
            layer_from(node["layer"], path + ".layer");
        }
        if (node["qubit"]) {
            t.qubit = rd.unsigned_int(node["qubit"], path + ".qubit");
        }
    } else {
        rd.fail(path, node, "expected a target");
    }
    return t;
}

CostChoice parse_cost(const Reader &rd, const YAML::Node &node, const std::string &path) {
    CostChoice c;
    if (node.IsScalar()) {
        const std::string s = node.Scalar();
        if (s == "global") {
            c.kind = CostChoice::Kind::Global;
        } else if (s == "local") {
            c.kind = CostChoice::Kind::Local;
        } else {
            rd.fail(path, node, "expected global, local, {local: k} or {custom: [...]}");
        }
        return c;
    }
    rd.check_keys(node, path, {"local", "custom"});
    if (node.size() != 1) {
        rd.fail(path, node, "give exactly one of local or custom");
    }
    if (node["local"]) {
        c.kind = CostChoice::Kind::Local;
        c.locality = rd.unsigned_int(node["local"], path + ".local");
        return c;
    }
    c.kind = CostChoice::Kind::Custom;
    const YAML::Node terms = node["custom"];
    if (!terms.IsSequence() || terms.size() == 0) {
        rd.fail(path + ".custom", terms, "expected a non-empty list of terms");
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string p = path + ".custom[" + std::to_string(i) + "]";
        rd.check_keys(terms[i], p, {"pauli", "coefficient", "state"});
        CustomTerm t;
        if (!terms[i]["pauli"]) {
            rd.fail(p + ".pauli", terms[i], "missing");
        }
        t.pauli = rd.scalar(terms[i]["pauli"], p + ".pauli");
        try {
            (void)parse_pauli_string(t.pauli);
        } catch (const ParseError &e) {
            rd.fail(p + ".pauli", terms[i]["pauli"], e.what());
        }
        if (terms[i]["coefficient"]) {
            t.coefficient = rd.real(terms[i]["coefficient"], p + ".coefficient");
        }
        if (terms[i]["state"]) {
            t.state = rd.named(terms[i]["state"], p + ".state", [](const std::string &s) {
                (void)parse_initial_state(s);
                return s;
            });
        }
        c.terms.push_back(std::move(t));
    }
    return c;
}

void require(bool ok, const std::string &field, const std::string &message) {
    if (!ok) {
        throw ValidationError(field + ": " + message);
    }
}

} // namespace

std::string_view experiment_kind_name(ExperimentKind kind) noexcept {
    for (const auto &[k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
    for (const auto &[k, n] : kKindNames) {
        if (n == name) {
            return k;
        }
    }
    throw ParseError("", "unknown experiment kind '" + std::string(name) + "'");
}

bool is_variance_kind(ExperimentKind kind) noexcept {
    switch (kind) {
    case ExperimentKind::VarianceVsN:
    case ExperimentKind::VarianceVsDepth:
    case ExperimentKind::CorrelationSchemes:
    case ExperimentKind::AxisRestriction:
    case ExperimentKind::AngleRestriction:
        return true;
    default:
        return false;
    }
}

Slot TargetChoice::resolve(std::size_t depth) const noexcept {
    switch (layer_kind) {
    case Layer::First:
        return {0, qubit};
    case Layer::Middle:
        return {depth / 2, qubit};
    case Layer::Last:
        return {depth - 1, qubit};
    case Layer::Index:
        break;
    }
    return {layer, qubit};
}

std::string TargetChoice::label() const {
    std::string l;
    switch (layer_kind) {
    case Layer::First:
        l = "first";
        break;
    case Layer::Middle:
        l = "mid";
        break;
    case Layer::Last:
        l = "last";
        break;
    case Layer::Index:
        l = std::to_string(layer);
        break;
    }
    return l + ":" + std::to_string(qubit);
}

CostSpec CostChoice::build(std::size_t n, const InitialStateSpec &state) const {
    switch (kind) {
    case Kind::Global:
        return CostSpec::single(Observable::global_z(n), state);
    case Kind::Local:
        return CostSpec::single(Observable::local_z(n, locality), state);
    case Kind::Custom:
        break;
    }
    CostSpec spec;
    for (const auto &t : terms) {
        InitialStateSpec s = state;
        if (!t.state.empty()) {
            s.kind = parse_initial_state(t.state);
        }
        spec.terms.push_back({s, Observable(n, {parse_pauli_string(t.pauli, t.coefficient)})});
    }
    return spec;
}

std::string CostChoice::label() const {
    switch (kind) {
    case Kind::Global:
        return "global";
    case Kind::Local:
        return "local-" + std::to_string(locality);
    case Kind::Custom:
        break;
    }
    return "custom";
}

std::string axes_label(const std::vector<Axis> &axes) {
    std::string s;
    for (Axis a : axes) {
        s += axis_char(a);
    }
    return s;
}

std::vector<Axis> parse_axes(std::string_view text) {
    if (text.empty()) {
        throw ParseError("", "empty axis set");
    }
    std::vector<Axis> out;
    for (char c : text) {
        const Axis a = parse_axis(c);
        if (std::find(out.begin(), out.end(), a) != out.end()) {
            throw ParseError("", "repeated axis in '" + std::string(text) + "'");
        }
        out.push_back(a);
    }
    return out;
}

std::size_t ExperimentConfig::cell_count() const noexcept {
    return n_values.size() * depths.size() * schemes.size() * axes.size() * r_values.size() *
           targets.size();
}

void ExperimentConfig::validate() const {
    require(cell_count() > 0, "grid", "every grid axis needs at least one value");
    require(n_samples >= 2, "n_samples", "need at least 2 samples");
    require(dense_cap >= 1, "dense_cap", "must be positive");
    require(gradient.fd_step > 0, "fd_step", "must be positive");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const std::string f = "grid.n[" + std::to_string(i) + "]";
        require(n_values[i] >= 1 && n_values[i] <= 24, f, "qubit count must be in 1..24");
    }
    for (std::size_t i = 0; i < depths.size(); ++i) {
        require(depths[i] >= 1, "grid.depth[" + std::to_string(i) + "]", "depth must be >= 1");
    }
    for (std::size_t i = 0; i < r_values.size(); ++i) {
        require(r_values[i] > 0 && r_values[i] <= 1, "grid.r[" + std::to_string(i) + "]",
                "range fraction must be in (0, 1]");
    }
    const std::size_t n_min = *std::min_element(n_values.begin(), n_values.end());
    const std::size_t n_max = *std::max_element(n_values.begin(), n_values.end());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const std::string f = "grid.target[" + std::to_string(i) + "]";
        require(targets[i].qubit < n_min, f, "qubit index exceeds the smallest n");
        if (targets[i].layer_kind == TargetChoice::Layer::Index) {
            for (std::size_t d : depths) {
                require(targets[i].layer < d, f, "layer index exceeds depth " + std::to_string(d));
            }
        }
    }
    if (cost.kind == CostChoice::Kind::Local) {
        require(cost.locality >= 1 && cost.locality <= n_min, "cost.local",
                "locality must be in 1..min n");
    }
    if (cost.kind == CostChoice::Kind::Custom) {
        require(!cost.terms.empty(), "cost.custom", "no terms");
        for (std::size_t i = 0; i < cost.terms.size(); ++i) {
            const PauliTerm t = parse_pauli_string(cost.terms[i].pauli);
            for (const auto &f : t.factors) {
                require(f.qubit < n_min, "cost.custom[" + std::to_string(i) + "].pauli",
                        "qubit index exceeds the smallest n");
            }
        }
    }
    if (kind == ExperimentKind::BoundVerification) {
        require(cost.kind != CostChoice::Kind::Custom || cost.terms.size() == 1, "cost",
                "bound verification needs a single-term cost");
        require(n_max <= dense_cap, "dense_cap", "bound verification builds dense unitaries");
        require(n_pairs >= 1 && n_inner >= 2, "n_pairs", "ensemble sizes must be positive");
    }
    if (kind == ExperimentKind::ExpressibilityCorrelation) {
        require(n_pairs >= 1, "n_pairs", "must be positive");
        require(cost.kind != CostChoice::Kind::Custom || cost.terms.size() == 1, "cost",
                "frame potentials need a single-term cost");
    }
    if (kind == ExperimentKind::HaarIdentityCheck) {
        require(n_max <= dense_cap, "grid.n", "identity check dimension exceeds dense_cap");
        require(identity_tuples >= 1, "identity_tuples", "must be positive");
    }
}

std::string ExperimentConfig::canonical() const {
    std::ostringstream os;
    auto join = [&](const char *key, const auto &values, auto &&fmt) {
        os << key << '=';
        for (std::size_t i = 0; i < values.size(); ++i) {
            os << (i ? "," : "") << fmt(values[i]);
        }
        os << ';';
    };
    auto ident = [](auto v) { return std::to_string(v); };
    os << "experiment=" << experiment_kind_name(kind) << ';';
    join("n", n_values, ident);
    join("depth", depths, ident);
    join("scheme", schemes, [](auto s) { return std::string(scheme_name(s)); });
    join("axes", axes, [](const auto &a) { return axes_label(a); });
    join("r", r_values, fmt_double);
    join("target", targets, [](const auto &t) { return t.label(); });
    os << "cost=" << cost.label() << ';';
    for (const auto &t : cost.terms) {
        os << "term=" << fmt_double(t.coefficient) << '*' << t.pauli << '@' << t.state << ';';
    }
    os << "initial_state=" << initial_state_name(initial_state.kind) << ':'
       << fmt_double(initial_state.angle) << ';' << "n_samples=" << n_samples << ';'
       << "n_pairs=" << n_pairs << ';' << "n_inner=" << n_inner << ';' << "seed=" << seed
       << ';' << "dense_cap=" << dense_cap << ';' << "record_wall_time=" << record_wall_time
       << ';' << "base_point=" << (base_point == BasePoint::Zero ? "zero" : "random") << ';'
       << "base_seed=" << base_seed << ';' << "resample_axes=" << resample_axes << ';'
       << "layout_seed=" << layout_seed << ';'
       << "gradient_method=" << gradient_method_name(gradient.method) << ';'
       << "derivative_mode=" << derivative_mode_name(gradient.mode) << ';'
       << "fd_step=" << fmt_double(gradient.fd_step) << ';'
       << "identity_tuples=" << identity_tuples << ';';
    return os.str();
}

std::string ExperimentConfig::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical()) {
        h = (h ^ c) * 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExperimentConfig parse_config(const std::string &text, const std::string &source) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception &e) {
        throw ParseError("", source + ": " + e.what());
    }
    const Reader rd(source);
    if (!root.IsMap()) {
        rd.fail("", root, "config must be a mapping");
    }
    rd.check_keys(root, "",
                  {"experiment", "grid", "cost", "initial_state", "tilt_angle", "n_samples",
                   "n_pairs", "n_inner", "seed", "dense_cap", "output", "record_wall_time",
                   "base_point", "base_seed", "resample_axes", "layout_seed",
                   "gradient_method", "derivative_mode", "fd_step", "identity_tuples",
                   "threads"});
    ExperimentConfig cfg;
    if (!root["experiment"]) {
        rd.fail("experiment", root, "missing");
    }
    cfg.kind = rd.named(root["experiment"], "experiment", parse_experiment_kind);

    if (const YAML::Node g = root["grid"]) {
        rd.check_keys(g, "grid", {"n", "depth", "scheme", "axes", "r", "target"});
        auto uint_item = [&](const YAML::Node &n, const std::string &p) {
            return static_cast<std::size_t>(rd.unsigned_int(n, p));
        };
        if (g["n"]) {
            cfg.n_values = rd.list<std::size_t>(g["n"], "grid.n", uint_item);
        }
        if (g["depth"]) {
            cfg.depths = rd.list<std::size_t>(g["depth"], "grid.depth", uint_item);
        }
        if (g["scheme"]) {
            cfg.schemes = rd.list<CorrelationScheme>(
                g["scheme"], "grid.scheme", [&](const YAML::Node &n, const std::string &p) {
                    return rd.named(n, p, [](const std::string &s) { return parse_scheme(s); });
                });
        }
        if (g["axes"]) {
            cfg.axes = rd.list<std::vector<Axis>>(
                g["axes"], "grid.axes", [&](const YAML::Node &n, const std::string &p) {
                    return rd.named(n, p, [](const std::string &s) { return parse_axes(s); });
                });
        }
        if (g["r"]) {
            cfg.r_values = rd.list<double>(
                g["r"], "grid.r",
                [&](const YAML::Node &n, const std::string &p) { return rd.real(n, p); });
        }
        if (g["target"]) {
            const YAML::Node t = g["target"];
            // A bare [layer, qubit] pair is one target, not two.
            const bool single_pair = t.IsSequence() && t.size() == 2 && t[0].IsScalar() &&
                                     t[1].IsScalar() && t[1].Scalar() != "first" &&
                                     t[1].Scalar() != "mid" && t[1].Scalar() != "last";
            if (single_pair || t.IsMap()) {
                cfg.targets = {parse_target(rd, t, "grid.target")};
            } else {
                cfg.targets = rd.list<TargetChoice>(
                    t, "grid.target", [&](const YAML::Node &n, const std::string &p) {
                        return parse_target(rd, n, p);
                    });
            }
        }
    }
    if (root["cost"]) {
        cfg.cost = parse_cost(rd, root["cost"], "cost");
    }
    if (root["initial_state"]) {
        cfg.initial_state.kind =
            rd.named(root["initial_state"], "initial_state",
                     [](const std::string &s) { return parse_initial_state(s); });
    }
    if (root["tilt_angle"]) {
        cfg.initial_state.angle = rd.real(root["tilt_angle"], "tilt_angle");
    }
    auto opt_uint = [&](const char *key, auto &field) {
        if (root[key]) {
            field = static_cast<std::remove_reference_t<decltype(field)>>(
                rd.unsigned_int(root[key], key));
        }
    };
    opt_uint("n_samples", cfg.n_samples);
    opt_uint("n_pairs", cfg.n_pairs);
    opt_uint("n_inner", cfg.n_inner);
    opt_uint("seed", cfg.seed);
    opt_uint("dense_cap", cfg.dense_cap);
    opt_uint("base_seed", cfg.base_seed);
    opt_uint("layout_seed", cfg.layout_seed);
    opt_uint("identity_tuples", cfg.identity_tuples);
    opt_uint("threads", cfg.threads);
    if (root["output"]) {
        cfg.output = rd.scalar(root["output"], "output");
    }
    if (root["record_wall_time"]) {
        cfg.record_wall_time = rd.boolean(root["record_wall_time"], "record_wall_time");
    }
    if (root["resample_axes"]) {
        cfg.resample_axes = rd.boolean(root["resample_axes"], "resample_axes");
    }
    if (root["base_point"]) {
        cfg.base_point = rd.named(root["base_point"], "base_point", [](const std::string &s) {
            if (s == "zero") {
                return BasePoint::Zero;
            }
            if (s == "random") {
                return BasePoint::Random;
            }
            throw ParseError("", "expected zero or random, got '" + s + "'");
        });
    }
    if (root["gradient_method"]) {
        cfg.gradient.method =
            rd.named(root["gradient_method"], "gradient_method",
                     [](const std::string &s) { return parse_gradient_method(s); });
    }
    if (root["derivative_mode"]) {
        cfg.gradient.mode =
            rd.named(root["derivative_mode"], "derivative_mode",
                     [](const std::string &s) { return parse_derivative_mode(s); });
    }
    if (root["fd_step"]) {
        cfg.gradient.fd_step = rd.real(root["fd_step"], "fd_step");
    }
    try {
        cfg.validate();
    } catch (const ValidationError &e) {
        throw ParseError("", source + ": " + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

} // namespace plateau
