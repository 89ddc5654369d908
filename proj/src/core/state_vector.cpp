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

#include "plateau/core/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "plateau/core/pauli.hpp"
#include "plateau/errors.hpp"

namespace plateau {

namespace kernels {

namespace {

constexpr std::size_t bit_of(std::size_t n_qubits, std::size_t qubit) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

// Visits every index pair (i0, i0 | stride) with the stride bit clear.
template <class Fn>
void for_each_pair(std::size_t dim, std::size_t stride, Fn &&fn) {
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            fn(i, i + stride);
        }
    }
}

} // namespace

void apply_rotation(std::span<cplx> amps, std::size_t n_qubits,
                    std::size_t qubit, Axis axis, double angle) {
    const std::size_t stride = bit_of(n_qubits, qubit);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    switch (axis) {
    case Axis::X: {
        // [[c, -is], [-is, c]]
        const cplx mis{0.0, -s};
        for_each_pair(amps.size(), stride, [&](std::size_t i0, std::size_t i1) {
            const cplx a0 = amps[i0];
            const cplx a1 = amps[i1];
            amps[i0] = c * a0 + mis * a1;
            amps[i1] = mis * a0 + c * a1;
        });
        break;
    }
    case Axis::Y: {
        // [[c, -s], [s, c]]
        for_each_pair(amps.size(), stride, [&](std::size_t i0, std::size_t i1) {
            const cplx a0 = amps[i0];
            const cplx a1 = amps[i1];
            amps[i0] = c * a0 - s * a1;
            amps[i1] = s * a0 + c * a1;
        });
        break;
    }
    case Axis::Z: {
        // diag(e^{-i angle}, e^{+i angle})
        const cplx p0{c, -s};
        const cplx p1{c, s};
        for_each_pair(amps.size(), stride, [&](std::size_t i0, std::size_t i1) {
            amps[i0] *= p0;
            amps[i1] *= p1;
        });
        break;
    }
    }
}

void apply_cphase(std::span<cplx> amps, std::size_t n_qubits, std::size_t a,
                  std::size_t b) {
    const std::size_t mask = bit_of(n_qubits, a) | bit_of(n_qubits, b);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

void apply_cphase_ladder(std::span<cplx> amps, std::size_t n_qubits) {
    const std::size_t pair_mask = (std::size_t{1} << (n_qubits - 1)) - 1;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        // Adjacent set bits (i, i+1) each contribute one sign flip.
        if ((std::popcount(i & (i >> 1U) & pair_mask) & 1) != 0) {
            amps[i] = -amps[i];
        }
    }
}

void apply_gate(std::span<cplx> amps, std::size_t n_qubits, const Gate &gate) {
    if (const auto *r = std::get_if<Rotation>(&gate)) {
        apply_rotation(amps, n_qubits, r->qubit, r->axis, r->angle);
    } else {
        const auto &cz = std::get<CPhase>(gate);
        apply_cphase(amps, n_qubits, cz.control, cz.target);
    }
}

void apply_gates(std::span<cplx> amps, std::size_t n_qubits,
                 std::span<const Gate> gates) {
    for (const Gate &g : gates) {
        apply_gate(amps, n_qubits, g);
    }
}

void apply_gates_adjoint(std::span<cplx> amps, std::size_t n_qubits,
                         std::span<const Gate> gates) {
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (const auto *r = std::get_if<Rotation>(&*it)) {
            apply_rotation(amps, n_qubits, r->qubit, r->axis, -r->angle);
        } else {
            const auto &cz = std::get<CPhase>(*it);
            apply_cphase(amps, n_qubits, cz.control, cz.target);
        }
    }
}

} // namespace kernels

namespace {

constexpr std::size_t kMaxQubits = 30;

void check_gate_qubits(const Gate &gate, std::size_t n_qubits) {
    if (const auto *r = std::get_if<Rotation>(&gate)) {
        if (r->qubit >= n_qubits) {
            throw IndexError("rotation qubit " + std::to_string(r->qubit) +
                             " out of range for " + std::to_string(n_qubits) +
                             " qubits");
        }
    } else {
        const auto &cz = std::get<CPhase>(gate);
        if (cz.control >= n_qubits || cz.target >= n_qubits ||
            cz.control == cz.target) {
            throw IndexError("invalid C-Phase qubit pair");
        }
    }
}

} // namespace

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_() {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw PreconditionError("qubit count must be in [1, 30]");
    }
    amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<cplx> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
    const std::size_t len = amplitudes.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw ShapeError("amplitude count must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(len));
    StateVector s(n, std::move(amplitudes));
    if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
        throw DomainError("state vector is not normalized");
    }
    return s;
}

StateVector StateVector::from_amplitudes_unchecked(std::vector<cplx> amplitudes) {
    const std::size_t len = amplitudes.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw ShapeError("amplitude count must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(len));
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) {
        throw IndexError("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw IndexError("qubit " + std::to_string(qubit) +
                         " out of range for " + std::to_string(n_qubits_) +
                         " qubits");
    }
}

StateVector &StateVector::apply(const Rotation &rotation) {
    check_qubit(rotation.qubit);
    if (!std::isfinite(rotation.angle)) {
        throw PreconditionError("rotation angle must be finite");
    }
    kernels::apply_rotation(amps_, n_qubits_, rotation.qubit, rotation.axis,
                            rotation.angle);
    return *this;
}

StateVector &StateVector::apply(const CPhase &cphase) {
    check_gate_qubits(cphase, n_qubits_);
    kernels::apply_cphase(amps_, n_qubits_, cphase.control, cphase.target);
    return *this;
}

StateVector &StateVector::apply(const Gate &gate) {
    std::visit([this](const auto &g) { apply(g); }, gate);
    return *this;
}

StateVector &StateVector::apply(const GateSequence &gates) {
    for (const Gate &g : gates) {
        check_gate_qubits(g, n_qubits_);
    }
    kernels::apply_gates(amps_, n_qubits_, gates);
    return *this;
}

StateVector &StateVector::apply_adjoint(std::span<const Gate> gates) {
    for (const Gate &g : gates) {
        check_gate_qubits(g, n_qubits_);
    }
    kernels::apply_gates_adjoint(amps_, n_qubits_, gates);
    return *this;
}

StateVector &StateVector::apply_cphase_ladder() {
    if (n_qubits_ < 2) {
        throw PreconditionError("C-Phase ladder needs at least 2 qubits");
    }
    kernels::apply_cphase_ladder(amps_, n_qubits_);
    return *this;
}

StateVector &StateVector::apply_pauli(const PauliTerm &term) {
    term.validate(n_qubits_);
    apply_pauli_term(amps_, n_qubits_, term);
    return *this;
}

double StateVector::norm_squared() const noexcept {
    double s = 0.0;
    for (const cplx &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

cplx StateVector::inner(const StateVector &other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw ShapeError("inner product of states with different qubit counts");
    }
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        s += std::conj(amps_[i]) * other.amps_[i];
    }
    return s;
}

StateVector apply_rotation(StateVector state, std::size_t qubit, Axis axis,
                           double angle) {
    state.apply(Rotation{qubit, axis, angle});
    return state;
}

StateVector apply_cphase_ladder(StateVector state) {
    state.apply_cphase_ladder();
    return state;
}

cplx matrix_element(const StateVector &bra, const Observable &observable,
                    const StateVector &ket) {
    if (bra.n_qubits() != observable.n_qubits() ||
        ket.n_qubits() != observable.n_qubits()) {
        throw ShapeError("observable acts on " +
                         std::to_string(observable.n_qubits()) +
                         " qubits, state has " +
                         std::to_string(ket.n_qubits()));
    }
    const auto b = bra.amplitudes();
    const auto k = ket.amplitudes();
    cplx total{0.0, 0.0};
    for (const auto &t : observable.masked_terms()) {
        // P|x> = i^{ny} (-1)^{|x & phase|} |x ^ flip>
        cplx acc{0.0, 0.0};
        for (std::size_t x = 0; x < k.size(); ++x) {
            const cplx v = std::conj(b[x ^ t.flip_mask]) * k[x];
            acc += (std::popcount(x & t.phase_mask) & 1) != 0 ? -v : v;
        }
        static constexpr cplx kIPow[4] = {
            {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        total += t.coefficient * kIPow[t.y_count % 4] * acc;
    }
    return total;
}

double expectation(const StateVector &state, const Observable &observable) {
    const cplx v = matrix_element(state, observable, state);
    if (std::abs(v.imag()) > 1e-9) {
        throw NumericError("expectation value has imaginary residue " +
                           std::to_string(v.imag()));
    }
    return v.real();
}

} // namespace plateau
