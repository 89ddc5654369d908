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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plateau/core/gates.hpp"
#include "plateau/core/state_vector.hpp"

namespace plateau {

struct PauliFactor {
    std::size_t qubit = 0;
    Axis axis = Axis::Z;

    friend bool operator==(const PauliFactor &, const PauliFactor &) = default;
};

/// coefficient * (tensor product of the listed single-qubit Paulis). An empty
/// factor list is the identity.
struct PauliTerm {
    double coefficient = 1.0;
    std::vector<PauliFactor> factors;

    /// Throws IndexError if a qubit is >= n_qubits or repeated.
    void validate(std::size_t n_qubits) const;

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/// Parses "Z0 Z1", "X3", "I" (identity) into factors with coefficient 1.
[[nodiscard]] PauliTerm parse_pauli_string(std::string_view text,
                                           double coefficient = 1.0);

/// Hermitian operator stored as a real-weighted sum of Pauli strings.
///
/// Terms are canonicalized on construction: duplicated strings are merged,
/// so distinct terms are Hilbert-Schmidt orthogonal and every trace below is
/// exact without building a matrix.
class Observable {
  public:
    Observable(std::size_t n_qubits, std::vector<PauliTerm> terms);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept {
        return std::size_t{1} << n_qubits_;
    }
    [[nodiscard]] std::span<const PauliTerm> terms() const noexcept {
        return terms_;
    }

    /// Tr H = 2^n * (identity coefficient).
    [[nodiscard]] double trace() const noexcept;
    /// ||H||_2^2 = Tr H^2 = 2^n * sum of squared coefficients.
    [[nodiscard]] double hs_norm_squared() const noexcept;

    /// |out> = H |in>.
    void apply(std::span<const cplx> in, std::span<cplx> out) const;

    /// Tensor product of sigma_z on every qubit.
    static Observable global_z(std::size_t n_qubits);
    /// sigma_z on qubits 0 .. k-1.
    static Observable local_z(std::size_t n_qubits, std::size_t k = 2);
    static Observable single(std::size_t n_qubits, std::size_t qubit, Axis axis);

    /// Bit-mask form of a term, used by the kernels.
    struct MaskedTerm {
        double coefficient;
        std::uint64_t flip_mask;  // X or Y factors
        std::uint64_t phase_mask; // Y or Z factors
        unsigned y_count;
    };
    [[nodiscard]] std::span<const MaskedTerm> masked_terms() const noexcept {
        return masked_;
    }

  private:
    std::size_t n_qubits_;
    std::vector<PauliTerm> terms_;
    std::vector<MaskedTerm> masked_;
};

/// Applies one Pauli string (with its coefficient) to a buffer in place.
void apply_pauli_term(std::span<cplx> amps, std::size_t n_qubits,
                      const PauliTerm &term);

} // namespace plateau
