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

#include "plateau/expressibility/ensemble.hpp"

#include <bit>

#include "plateau/errors.hpp"

namespace plateau {

void SampledUnitary::apply(StateVector &state) const {
    if (const auto *g = std::get_if<GateSequence>(&op)) {
        state.apply(*g);
        return;
    }
    state = DenseOperator(std::get<ComplexMatrix>(op)).apply(state);
}

void SampledUnitary::apply_adjoint(StateVector &state) const {
    if (const auto *g = std::get_if<GateSequence>(&op)) {
        state.apply_adjoint(*g);
        return;
    }
    const ComplexMatrix &m = std::get<ComplexMatrix>(op);
    state = DenseOperator(m.adjoint()).apply(state);
}

ComplexMatrix SampledUnitary::matrix(std::size_t cap) const {
    if (const auto *g = std::get_if<GateSequence>(&op)) {
        return circuit_matrix(*g, n_qubits, cap);
    }
    check_dense_cap(n_qubits, cap);
    return std::get<ComplexMatrix>(op);
}

EnsembleSampler EnsembleSampler::ansatz(AnsatzSpec spec, Segment segment, Slot target) {
    spec.validate();
    if (segment != Segment::Full) {
        spec.check_slot(target);
    }
    EnsembleSampler s(Kind::Ansatz, spec.n_qubits);
    s.spec_ = std::move(spec);
    s.segment_ = segment;
    s.target_ = target;
    return s;
}

EnsembleSampler EnsembleSampler::haar(std::size_t n_qubits) {
    if (n_qubits == 0) {
        throw PreconditionError("Haar ensemble needs at least one qubit");
    }
    return EnsembleSampler(Kind::Haar, n_qubits);
}

EnsembleSampler EnsembleSampler::fixed(std::vector<DenseOperator> members) {
    if (members.empty()) {
        throw PreconditionError("fixed ensemble needs at least one member");
    }
    const std::size_t dim = members.front().dim();
    if (!std::has_single_bit(dim) || dim < 2) {
        throw ShapeError("fixed ensemble dimension must be a power of two");
    }
    EnsembleSampler s(Kind::Fixed, static_cast<std::size_t>(std::countr_zero(dim)));
    for (auto &m : members) {
        if (m.dim() != dim) {
            throw ShapeError("fixed ensemble members differ in dimension");
        }
        if (!m.is_unitary()) {
            throw DomainError("fixed ensemble member is not unitary");
        }
        s.members_.push_back(m.matrix());
    }
    return s;
}

SampledUnitary EnsembleSampler::draw(Rng &rng) const {
    SampledUnitary out;
    out.n_qubits = n_qubits_;
    switch (kind_) {
    case Kind::Haar:
        out.op = haar_random_unitary(std::size_t{1} << n_qubits_, rng).matrix();
        break;
    case Kind::Fixed:
        out.op = members_.size() == 1 ? members_.front() : members_[rng.below(members_.size())];
        break;
    case Kind::Ansatz: {
        const ParameterAssignment a = sample_assignment(spec_, rng);
        if (segment_ == Segment::Full) {
            out.op = realize_circuit(spec_, a);
        } else {
            CircuitCut cut = split_at(spec_, a, target_);
            out.op = segment_ == Segment::Left ? std::move(cut.left) : std::move(cut.right);
        }
        break;
    }
    }
    return out;
}

} // namespace plateau
