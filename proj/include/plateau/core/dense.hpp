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
#include <span>

#include <Eigen/Dense>

#include "plateau/core/gates.hpp"
#include "plateau/core/pauli.hpp"
#include "plateau/core/state_vector.hpp"
#include "plateau/rng.hpp"

namespace plateau {

using ComplexMatrix = Eigen::MatrixXcd;

/// Dense paths scale as 4^n to 16^n; they refuse to run above this many
/// qubits unless the caller raises the cap.
inline constexpr std::size_t kDefaultDenseCap = 6;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;

/// Square complex matrix with cached Hermitian / unitary flags. The flags are
/// computed from the entries at construction, never asserted by the caller.
class DenseOperator {
  public:
    explicit DenseOperator(ComplexMatrix matrix);

    static DenseOperator identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(matrix_.rows());
    }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    [[nodiscard]] bool is_hermitian() const noexcept { return hermitian_; }
    [[nodiscard]] bool is_unitary() const noexcept { return unitary_; }

    [[nodiscard]] DenseOperator adjoint() const;
    [[nodiscard]] cplx trace() const { return matrix_.trace(); }

    /// |out> = M |in> for a state of matching dimension.
    [[nodiscard]] StateVector apply(const StateVector &state) const;

  private:
    ComplexMatrix matrix_;
    bool hermitian_;
    bool unitary_;
};

[[nodiscard]] DenseOperator operator*(const DenseOperator &a,
                                      const DenseOperator &b);

[[nodiscard]] ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

[[nodiscard]] ComplexMatrix pauli_matrix(Axis axis);
/// 2x2 matrix of exp(-i angle sigma_axis).
[[nodiscard]] ComplexMatrix rotation_matrix(Axis axis, double angle);

/// Haar-distributed unitary: QR of a complex Ginibre matrix, with each column
/// of Q multiplied by the phase of the matching diagonal entry of R.
[[nodiscard]] DenseOperator haar_random_unitary(std::size_t dim, Rng &rng);

/// Matrix with iid complex Gaussian entries, E|z|^2 = variance.
[[nodiscard]] ComplexMatrix ginibre_matrix(std::size_t rows, std::size_t cols,
                                           Rng &rng, double variance = 1.0);

/// d^2 x d^2 permutation W |i>|j> = |j>|i>, with |i>|j> at index i*d + j.
[[nodiscard]] DenseOperator swap_operator(std::size_t d);

/// Product of the full 2^n x 2^n gate matrices (built with Kronecker
/// products) in application order. Independent oracle for the kernels.
[[nodiscard]] DenseOperator dense_circuit_unitary(const GateSequence &gates,
                                                  std::size_t n_qubits,
                                                  std::size_t cap = kDefaultDenseCap);

/// Same unitary as dense_circuit_unitary, built by running the statevector
/// kernels on every basis column. O(4^n * gates) instead of O(8^n * gates).
[[nodiscard]] ComplexMatrix circuit_matrix(std::span<const Gate> gates,
                                           std::size_t n_qubits,
                                           std::size_t cap = kDefaultDenseCap);

/// Dense realization of H from per-term Kronecker products.
[[nodiscard]] DenseOperator observable_to_dense(const Observable &observable,
                                                std::size_t cap = kDefaultDenseCap);

/// Dense |psi><psi|.
[[nodiscard]] DenseOperator projector(const StateVector &state,
                                      std::size_t cap = kDefaultDenseCap);

/// Throws ResourceGuardError if n_qubits > cap.
void check_dense_cap(std::size_t n_qubits, std::size_t cap);

} // namespace plateau
