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
#include <string_view>
#include <vector>

#include "plateau/core/gates.hpp"
#include "plateau/core/pauli.hpp"
#include "plateau/rng.hpp"

namespace plateau {

/// How rotation angles are tied together across the (layer, qubit) grid.
enum class CorrelationScheme : std::uint8_t {
    Independent,     // one parameter per slot
    CorrelateQubits, // all qubits of a layer share a parameter
    CorrelateLayers, // a qubit shares its parameter across layers
    CorrelateAll,    // one parameter for the whole circuit
};

[[nodiscard]] std::string_view scheme_name(CorrelationScheme scheme) noexcept;
[[nodiscard]] CorrelationScheme parse_scheme(std::string_view name);

struct AxisPolicy {
    std::vector<Axis> allowed_axes{Axis::X, Axis::Y, Axis::Z};
    /// When false, the axis layout is drawn once from `layout_seed` and
    /// shared by every ensemble member.
    bool resample_per_sample = true;
    std::uint64_t layout_seed = 0;
};

/// Angles of parameter p are uniform on [base(p), base(p) + 2 pi r].
struct AngleDistribution {
    /// One entry per free parameter; empty means all zero.
    std::vector<double> base_point;
    double range_fraction = 1.0;

    [[nodiscard]] double base(std::size_t parameter) const {
        return base_point.empty() ? 0.0 : base_point.at(parameter);
    }

    /// Base point with every entry uniform on [0, 2 pi), drawn from `seed`.
    static std::vector<double> random_base(std::size_t count, std::uint64_t seed);
};

struct Slot {
    std::size_t layer = 0;
    std::size_t qubit = 0;

    friend bool operator==(const Slot &, const Slot &) = default;
};

/// Layered hardware-efficient ansatz: each layer applies one rotation per
/// qubit (ascending qubit index) followed by a C-Phase ladder on the open
/// chain. Layers and qubits are 0-based.
struct AnsatzSpec {
    std::size_t n_qubits = 1;
    std::size_t depth = 1;
    CorrelationScheme scheme = CorrelationScheme::Independent;
    AxisPolicy axis_policy;
    AngleDistribution angles;

    /// Throws ValidationError on an inconsistent spec.
    void validate() const;

    [[nodiscard]] std::size_t free_parameter_count() const noexcept;
    [[nodiscard]] std::size_t rotation_count() const noexcept {
        return n_qubits * depth;
    }
    [[nodiscard]] std::size_t gate_count() const noexcept {
        return n_qubits * depth + (n_qubits - 1) * depth;
    }
    [[nodiscard]] std::size_t group_of(Slot slot) const noexcept;
    [[nodiscard]] std::size_t slot_index(Slot slot) const noexcept {
        return slot.layer * n_qubits + slot.qubit;
    }
    /// Position of the slot's rotation in the realized gate sequence.
    [[nodiscard]] std::size_t gate_index(Slot slot) const noexcept {
        return slot.layer * (2 * n_qubits - 1) + slot.qubit;
    }
    void check_slot(Slot slot) const;
};

struct ParameterAssignment {
    std::vector<double> free_values;
    std::vector<Axis> group_axes;
    /// groups[p] lists the slots driven by free parameter p.
    std::vector<std::vector<Slot>> groups;
    /// Expanded per-slot tables, indexed by AnsatzSpec::slot_index.
    std::vector<double> angles;
    std::vector<Axis> axes;
};

/// Expansion map of the scheme; a partition of all slots.
[[nodiscard]] std::vector<std::vector<Slot>> parameter_groups(const AnsatzSpec &spec);

/// Axis layout per group for a fixed-layout policy, or for one ensemble
/// member under the resampling policy.
[[nodiscard]] std::vector<Axis> sample_axes(const AnsatzSpec &spec, Rng &rng);

[[nodiscard]] ParameterAssignment sample_assignment(const AnsatzSpec &spec, Rng &rng);

/// Builds an assignment from explicit per-group values and axes.
[[nodiscard]] ParameterAssignment make_assignment(const AnsatzSpec &spec,
                                                  std::vector<double> free_values,
                                                  std::vector<Axis> group_axes);

/// Throws ValidationError if `assignment` does not match `spec`.
void validate_assignment(const AnsatzSpec &spec, const ParameterAssignment &assignment);

[[nodiscard]] GateSequence realize_circuit(const AnsatzSpec &spec,
                                           const ParameterAssignment &assignment);

/// Circuit split at a target rotation. `right` ends with the target rotation;
/// applying `right` then `left` reproduces the full circuit.
struct CircuitCut {
    GateSequence right;
    PauliTerm generator;
    GateSequence left;
};

[[nodiscard]] CircuitCut split_at(const AnsatzSpec &spec,
                                  const ParameterAssignment &assignment, Slot target);

/// Splits an already realized circuit after gate `gate_index`, which must
/// be a rotation.
[[nodiscard]] CircuitCut split_gates(const GateSequence &gates, std::size_t gate_index);

} // namespace plateau
