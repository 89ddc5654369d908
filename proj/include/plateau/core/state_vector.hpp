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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "plateau/core/gates.hpp"

namespace plateau {

using cplx = std::complex<double>;

class Observable;
struct PauliTerm;

/// In-place gate kernels over a raw amplitude buffer of length 2^n.
///
/// Qubit 0 is the most significant bit of the amplitude index, so qubit q
/// toggles bit (n - 1 - q).
namespace kernels {

void apply_rotation(std::span<cplx> amps, std::size_t n_qubits,
                    std::size_t qubit, Axis axis, double angle);
void apply_cphase(std::span<cplx> amps, std::size_t n_qubits, std::size_t a,
                  std::size_t b);
/// All n - 1 nearest-neighbour C-Phase links of an open chain in one pass.
void apply_cphase_ladder(std::span<cplx> amps, std::size_t n_qubits);
void apply_gate(std::span<cplx> amps, std::size_t n_qubits, const Gate &gate);
void apply_gates(std::span<cplx> amps, std::size_t n_qubits,
                 std::span<const Gate> gates);
/// Applies the inverse of `gates`: reverse order, negated angles.
void apply_gates_adjoint(std::span<cplx> amps, std::size_t n_qubits,
                         std::span<const Gate> gates);

} // namespace kernels

/// Normalized pure state of n qubits.
class StateVector {
  public:
    /// |0...0>.
    explicit StateVector(std::size_t n_qubits);

    /// Takes ownership of `amplitudes`; length must be 2^n and the squared
    /// norm must be 1 within 1e-10.
    static StateVector from_amplitudes(std::vector<cplx> amplitudes);

    /// Same as from_amplitudes without the norm check, for auxiliary vectors
    /// such as H|psi>.
    static StateVector from_amplitudes_unchecked(std::vector<cplx> amplitudes);

    /// Computational basis state |index>.
    static StateVector basis(std::size_t n_qubits, std::size_t index);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] cplx operator[](std::size_t i) const { return amps_[i]; }

    StateVector &apply(const Rotation &rotation);
    StateVector &apply(const CPhase &cphase);
    StateVector &apply(const Gate &gate);
    StateVector &apply(const GateSequence &gates);
    StateVector &apply_adjoint(std::span<const Gate> gates);
    StateVector &apply_cphase_ladder();
    /// Multiplies by a single Pauli string including its coefficient sign.
    /// Only used for generators, which are unitary (|coefficient| = 1).
    StateVector &apply_pauli(const PauliTerm &term);

    [[nodiscard]] double norm_squared() const noexcept;
    /// <this|other>.
    [[nodiscard]] cplx inner(const StateVector &other) const;

  private:
    StateVector(std::size_t n_qubits, std::vector<cplx> amps);

    void check_qubit(std::size_t qubit) const;

    std::size_t n_qubits_;
    std::vector<cplx> amps_;
};

/// exp(-i angle sigma_axis) on `qubit`.
[[nodiscard]] StateVector apply_rotation(StateVector state, std::size_t qubit,
                                         Axis axis, double angle);

/// C-Phase on every adjacent pair (i, i+1) of an open chain. Needs n >= 2.
[[nodiscard]] StateVector apply_cphase_ladder(StateVector state);

/// <psi|H|psi>. Throws ShapeError on qubit mismatch and NumericError if the
/// imaginary residue exceeds 1e-9.
[[nodiscard]] double expectation(const StateVector &state,
                                 const Observable &observable);

/// <bra|H|ket>.
[[nodiscard]] cplx matrix_element(const StateVector &bra,
                                  const Observable &observable,
                                  const StateVector &ket);

} // namespace plateau
