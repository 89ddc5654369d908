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
#include <numbers>
#include <string_view>
#include <vector>

#include "plateau/ansatz/ansatz.hpp"
#include "plateau/core/pauli.hpp"
#include "plateau/core/state_vector.hpp"

namespace plateau {

enum class InitialStateKind : std::uint8_t { AllZero, TiltedProduct };

struct InitialStateSpec {
    InitialStateKind kind = InitialStateKind::AllZero;
    /// Per-qubit tilt for TiltedProduct: exp(-i angle sigma_y)|0>.
    double angle = std::numbers::pi / 8;

    [[nodiscard]] StateVector prepare(std::size_t n_qubits) const;
};

[[nodiscard]] std::string_view initial_state_name(InitialStateKind kind) noexcept;
[[nodiscard]] InitialStateKind parse_initial_state(std::string_view name);

struct CostTerm {
    InitialStateSpec state;
    Observable observable;
};

/// C = sum_i <psi_i| U^dag H_i U |psi_i>.
struct CostSpec {
    std::vector<CostTerm> terms;

    [[nodiscard]] std::size_t n_qubits() const;
    /// Throws ShapeError if a term disagrees with `n_qubits` or the list is empty.
    void validate(std::size_t n_qubits) const;

    static CostSpec single(Observable observable, InitialStateSpec state = {});
};

enum class GradientMethod : std::uint8_t { Commutator, ParameterShift, FiniteDifference };

[[nodiscard]] std::string_view gradient_method_name(GradientMethod method) noexcept;
[[nodiscard]] GradientMethod parse_gradient_method(std::string_view name);

/// GateLevel perturbs the target slot alone; ChainRule differentiates the
/// target's free parameter, summing over every slot of its group.
enum class DerivativeMode : std::uint8_t { GateLevel, ChainRule };

[[nodiscard]] std::string_view derivative_mode_name(DerivativeMode mode) noexcept;
[[nodiscard]] DerivativeMode parse_derivative_mode(std::string_view name);

inline constexpr double kDefaultFiniteDifferenceStep = 1e-4;

struct GradientOptions {
    GradientMethod method = GradientMethod::Commutator;
    DerivativeMode mode = DerivativeMode::GateLevel;
    double fd_step = kDefaultFiniteDifferenceStep;
};

[[nodiscard]] double cost(const CostSpec &cost_spec, std::size_t n_qubits,
                          const GateSequence &gates);
[[nodiscard]] double cost(const CostSpec &cost_spec, const AnsatzSpec &ansatz,
                          const ParameterAssignment &assignment);

/// Derivative with respect to the angle of the rotation at `gate_index`.
[[nodiscard]] double gate_derivative(const CostSpec &cost_spec, std::size_t n_qubits,
                                     const GateSequence &gates, std::size_t gate_index,
                                     GradientMethod method,
                                     double fd_step = kDefaultFiniteDifferenceStep);

/// Commutator-form derivative for every gate at once by a single reverse
/// sweep. Entries for C-Phase gates are 0.
[[nodiscard]] std::vector<double> rotation_gradients(const CostSpec &cost_spec,
                                                     std::size_t n_qubits,
                                                     const GateSequence &gates);

[[nodiscard]] double partial_derivative(const CostSpec &cost_spec,
                                        const AnsatzSpec &ansatz,
                                        const ParameterAssignment &assignment,
                                        Slot target, GradientOptions options = {});

} // namespace plateau
