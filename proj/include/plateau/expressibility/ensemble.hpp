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
#include <variant>
#include <vector>

#include "plateau/ansatz/ansatz.hpp"
#include "plateau/core/dense.hpp"
#include "plateau/core/state_vector.hpp"
#include "plateau/rng.hpp"

namespace plateau {

/// One draw from an ensemble, either as a gate list or a dense matrix.
struct SampledUnitary {
    std::size_t n_qubits = 0;
    std::variant<GateSequence, ComplexMatrix> op;

    void apply(StateVector &state) const;
    void apply_adjoint(StateVector &state) const;
    [[nodiscard]] ComplexMatrix matrix(std::size_t cap = kDefaultDenseCap) const;
};

/// Which part of the ansatz a sampler produces, relative to a cut at the
/// target rotation. Right includes the target rotation.
enum class Segment : std::uint8_t { Full, Left, Right };

class EnsembleSampler {
  public:
    static EnsembleSampler ansatz(AnsatzSpec spec, Segment segment = Segment::Full,
                                  Slot target = {});
    static EnsembleSampler haar(std::size_t n_qubits);
    /// Uniform over a list of unitaries on 2^n dimensions.
    static EnsembleSampler fixed(std::vector<DenseOperator> members);

    [[nodiscard]] SampledUnitary draw(Rng &rng) const;
    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }

  private:
    enum class Kind : std::uint8_t { Ansatz, Haar, Fixed };

    EnsembleSampler(Kind kind, std::size_t n_qubits) : kind_(kind), n_qubits_(n_qubits) {}

    Kind kind_;
    std::size_t n_qubits_;
    AnsatzSpec spec_;
    Segment segment_ = Segment::Full;
    Slot target_;
    std::vector<ComplexMatrix> members_;
};

} // namespace plateau
