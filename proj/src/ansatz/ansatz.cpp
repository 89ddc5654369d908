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

#include "plateau/ansatz/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "plateau/errors.hpp"

namespace plateau {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

std::string_view scheme_name(CorrelationScheme scheme) noexcept {
    switch (scheme) {
    case CorrelationScheme::Independent:
        return "independent";
    case CorrelationScheme::CorrelateQubits:
        return "correlate-qubits";
    case CorrelationScheme::CorrelateLayers:
        return "correlate-layers";
    case CorrelationScheme::CorrelateAll:
        return "correlate-all";
    }
    return "?";
}

CorrelationScheme parse_scheme(std::string_view name) {
    for (auto s : {CorrelationScheme::Independent, CorrelationScheme::CorrelateQubits,
                   CorrelationScheme::CorrelateLayers, CorrelationScheme::CorrelateAll}) {
        if (scheme_name(s) == name) {
            return s;
        }
    }
    throw ParseError("", "unknown correlation scheme '" + std::string(name) + "'");
}

std::vector<double> AngleDistribution::random_base(std::size_t count,
                                                   std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out(count);
    for (auto &v : out) {
        v = rng.uniform(0.0, kTwoPi);
    }
    return out;
}

void AnsatzSpec::validate() const {
    if (n_qubits == 0 || n_qubits > 30) {
        throw ValidationError("n_qubits must be in [1, 30]");
    }
    if (depth == 0) {
        throw ValidationError("depth must be positive");
    }
    if (axis_policy.allowed_axes.empty()) {
        throw ValidationError("allowed_axes must be nonempty");
    }
    if (!(angles.range_fraction > 0.0 && angles.range_fraction <= 1.0)) {
        throw ValidationError("range_fraction must lie in (0, 1]");
    }
    if (!angles.base_point.empty() &&
        angles.base_point.size() != free_parameter_count()) {
        throw ValidationError("base_point has " +
                              std::to_string(angles.base_point.size()) +
                              " entries, expected " +
                              std::to_string(free_parameter_count()));
    }
    for (double b : angles.base_point) {
        if (!std::isfinite(b)) {
            throw ValidationError("base_point entries must be finite");
        }
    }
}

std::size_t AnsatzSpec::free_parameter_count() const noexcept {
    switch (scheme) {
    case CorrelationScheme::Independent:
        return n_qubits * depth;
    case CorrelationScheme::CorrelateQubits:
        return depth;
    case CorrelationScheme::CorrelateLayers:
        return n_qubits;
    case CorrelationScheme::CorrelateAll:
        return 1;
    }
    return 0;
}

std::size_t AnsatzSpec::group_of(Slot slot) const noexcept {
    switch (scheme) {
    case CorrelationScheme::Independent:
        return slot_index(slot);
    case CorrelationScheme::CorrelateQubits:
        return slot.layer;
    case CorrelationScheme::CorrelateLayers:
        return slot.qubit;
    case CorrelationScheme::CorrelateAll:
        return 0;
    }
    return 0;
}

void AnsatzSpec::check_slot(Slot slot) const {
    if (slot.layer >= depth || slot.qubit >= n_qubits) {
        throw IndexError("slot (" + std::to_string(slot.layer) + ", " +
                         std::to_string(slot.qubit) + ") outside depth " +
                         std::to_string(depth) + " x " + std::to_string(n_qubits) +
                         " qubits");
    }
}

std::vector<std::vector<Slot>> parameter_groups(const AnsatzSpec &spec) {
    std::vector<std::vector<Slot>> groups(spec.free_parameter_count());
    for (std::size_t l = 0; l < spec.depth; ++l) {
        for (std::size_t q = 0; q < spec.n_qubits; ++q) {
            groups[spec.group_of({l, q})].push_back({l, q});
        }
    }
    return groups;
}

std::vector<Axis> sample_axes(const AnsatzSpec &spec, Rng &rng) {
    const auto &allowed = spec.axis_policy.allowed_axes;
    std::vector<Axis> axes(spec.free_parameter_count());
    for (auto &a : axes) {
        a = allowed.size() == 1 ? allowed.front() : allowed[rng.below(allowed.size())];
    }
    return axes;
}

ParameterAssignment make_assignment(const AnsatzSpec &spec,
                                    std::vector<double> free_values,
                                    std::vector<Axis> group_axes) {
    const std::size_t p = spec.free_parameter_count();
    if (free_values.size() != p || group_axes.size() != p) {
        throw ValidationError("assignment needs " + std::to_string(p) +
                              " values and axes");
    }
    ParameterAssignment a;
    a.free_values = std::move(free_values);
    a.group_axes = std::move(group_axes);
    a.groups = parameter_groups(spec);
    a.angles.resize(spec.rotation_count());
    a.axes.resize(spec.rotation_count());
    for (std::size_t g = 0; g < p; ++g) {
        for (const Slot &s : a.groups[g]) {
            a.angles[spec.slot_index(s)] = a.free_values[g];
            a.axes[spec.slot_index(s)] = a.group_axes[g];
        }
    }
    return a;
}

ParameterAssignment sample_assignment(const AnsatzSpec &spec, Rng &rng) {
    spec.validate();
    std::vector<Axis> axes;
    if (spec.axis_policy.resample_per_sample) {
        axes = sample_axes(spec, rng);
    } else {
        Rng layout(spec.axis_policy.layout_seed);
        axes = sample_axes(spec, layout);
    }
    const double width = kTwoPi * spec.angles.range_fraction;
    std::vector<double> values(spec.free_parameter_count());
    for (std::size_t p = 0; p < values.size(); ++p) {
        values[p] = spec.angles.base(p) + width * rng.uniform();
    }
    return make_assignment(spec, std::move(values), std::move(axes));
}

void validate_assignment(const AnsatzSpec &spec, const ParameterAssignment &a) {
    const std::size_t p = spec.free_parameter_count();
    if (a.free_values.size() != p || a.group_axes.size() != p || a.groups.size() != p) {
        throw ValidationError("assignment parameter count does not match spec");
    }
    if (a.angles.size() != spec.rotation_count() ||
        a.axes.size() != spec.rotation_count()) {
        throw ValidationError("assignment slot tables do not match spec");
    }
    std::vector<char> seen(spec.rotation_count(), 0);
    for (std::size_t g = 0; g < p; ++g) {
        for (const Slot &s : a.groups[g]) {
            if (s.layer >= spec.depth || s.qubit >= spec.n_qubits) {
                throw ValidationError("assignment group references a missing slot");
            }
            const std::size_t i = spec.slot_index(s);
            if (seen[i]++ != 0) {
                throw ValidationError("assignment groups overlap");
            }
            if (spec.group_of(s) != g) {
                throw ValidationError("assignment groups disagree with the scheme");
            }
            if (a.angles[i] != a.free_values[g] || a.axes[i] != a.group_axes[g]) {
                throw ValidationError("slot angle or axis differs from its group");
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw ValidationError("assignment groups do not cover every slot");
    }
    for (std::size_t i = 0; i < a.angles.size(); ++i) {
        if (!std::isfinite(a.angles[i])) {
            throw ValidationError("assignment angle is not finite");
        }
    }
}

GateSequence realize_circuit(const AnsatzSpec &spec, const ParameterAssignment &a) {
    validate_assignment(spec, a);
    GateSequence gates;
    gates.reserve(spec.gate_count());
    for (std::size_t l = 0; l < spec.depth; ++l) {
        for (std::size_t q = 0; q < spec.n_qubits; ++q) {
            const std::size_t i = spec.slot_index({l, q});
            gates.emplace_back(Rotation{q, a.axes[i], a.angles[i]});
        }
        for (std::size_t q = 0; q + 1 < spec.n_qubits; ++q) {
            gates.emplace_back(CPhase{q, q + 1});
        }
    }
    return gates;
}

CircuitCut split_gates(const GateSequence &gates, std::size_t gate_index) {
    if (gate_index >= gates.size()) {
        throw IndexError("cut index beyond circuit end");
    }
    const auto *rot = std::get_if<Rotation>(&gates[gate_index]);
    if (rot == nullptr) {
        throw IndexError("cut index does not point at a rotation");
    }
    CircuitCut cut;
    const auto split = gates.begin() + static_cast<std::ptrdiff_t>(gate_index) + 1;
    cut.right.assign(gates.begin(), split);
    cut.left.assign(split, gates.end());
    cut.generator.coefficient = 1.0;
    cut.generator.factors = {PauliFactor{rot->qubit, rot->axis}};
    return cut;
}

CircuitCut split_at(const AnsatzSpec &spec, const ParameterAssignment &a, Slot target) {
    spec.check_slot(target);
    return split_gates(realize_circuit(spec, a), spec.gate_index(target));
}

} // namespace plateau
