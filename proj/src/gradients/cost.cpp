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

#include "plateau/gradients/cost.hpp"

#include <cmath>
#include <string>

#include "plateau/errors.hpp"

namespace plateau {

StateVector InitialStateSpec::prepare(std::size_t n_qubits) const {
    StateVector s(n_qubits);
    if (kind == InitialStateKind::TiltedProduct) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            s.apply(Rotation{q, Axis::Y, angle});
        }
    }
    return s;
}

std::string_view initial_state_name(InitialStateKind kind) noexcept {
    return kind == InitialStateKind::AllZero ? "all-zero" : "tilted-product";
}

InitialStateKind parse_initial_state(std::string_view name) {
    if (name == "all-zero") {
        return InitialStateKind::AllZero;
    }
    if (name == "tilted-product") {
        return InitialStateKind::TiltedProduct;
    }
    throw ParseError("", "unknown initial state '" + std::string(name) + "'");
}

std::size_t CostSpec::n_qubits() const {
    if (terms.empty()) {
        throw ShapeError("cost has no terms");
    }
    return terms.front().observable.n_qubits();
}

void CostSpec::validate(std::size_t n) const {
    if (terms.empty()) {
        throw ShapeError("cost has no terms");
    }
    for (const auto &t : terms) {
        if (t.observable.n_qubits() != n) {
            throw ShapeError("cost observable acts on " +
                             std::to_string(t.observable.n_qubits()) +
                             " qubits, circuit has " + std::to_string(n));
        }
    }
}

CostSpec CostSpec::single(Observable observable, InitialStateSpec state) {
    CostSpec c;
    c.terms.push_back({state, std::move(observable)});
    return c;
}

std::string_view gradient_method_name(GradientMethod method) noexcept {
    switch (method) {
    case GradientMethod::Commutator:
        return "commutator";
    case GradientMethod::ParameterShift:
        return "parameter-shift";
    case GradientMethod::FiniteDifference:
        return "finite-difference";
    }
    return "?";
}

GradientMethod parse_gradient_method(std::string_view name) {
    for (auto m : {GradientMethod::Commutator, GradientMethod::ParameterShift,
                   GradientMethod::FiniteDifference}) {
        if (gradient_method_name(m) == name) {
            return m;
        }
    }
    throw ParseError("", "unknown gradient method '" + std::string(name) + "'");
}

std::string_view derivative_mode_name(DerivativeMode mode) noexcept {
    return mode == DerivativeMode::GateLevel ? "gate" : "chain-rule";
}

DerivativeMode parse_derivative_mode(std::string_view name) {
    if (name == "gate") {
        return DerivativeMode::GateLevel;
    }
    if (name == "chain-rule") {
        return DerivativeMode::ChainRule;
    }
    throw ParseError("", "unknown derivative mode '" + std::string(name) + "'");
}

double cost(const CostSpec &cost_spec, std::size_t n_qubits, const GateSequence &gates) {
    cost_spec.validate(n_qubits);
    double total = 0.0;
    for (const auto &term : cost_spec.terms) {
        StateVector s = term.state.prepare(n_qubits);
        s.apply(gates);
        total += expectation(s, term.observable);
    }
    return total;
}

double cost(const CostSpec &cost_spec, const AnsatzSpec &ansatz,
            const ParameterAssignment &assignment) {
    return cost(cost_spec, ansatz.n_qubits, realize_circuit(ansatz, assignment));
}

namespace {

Rotation &rotation_at(GateSequence &gates, std::size_t gate_index) {
    if (gate_index >= gates.size()) {
        throw IndexError("gate index beyond circuit end");
    }
    auto *r = std::get_if<Rotation>(&gates[gate_index]);
    if (r == nullptr) {
        throw IndexError("gate index does not point at a rotation");
    }
    return *r;
}

double shifted_difference(const CostSpec &cost_spec, std::size_t n,
                          const GateSequence &gates, std::size_t gate_index,
                          double shift) {
    GateSequence g = gates;
    Rotation &r = rotation_at(g, gate_index);
    const double theta = r.angle;
    r.angle = theta + shift;
    const double plus = cost(cost_spec, n, g);
    r.angle = theta - shift;
    const double minus = cost(cost_spec, n, g);
    return plus - minus;
}

double commutator_derivative(const CostSpec &cost_spec, std::size_t n,
                             const GateSequence &gates, std::size_t gate_index) {
    const CircuitCut cut = split_gates(gates, gate_index);
    double total = 0.0;
    for (const auto &term : cost_spec.terms) {
        StateVector phi = term.state.prepare(n);
        phi.apply(cut.right);
        StateVector chi = phi;
        chi.apply_pauli(cut.generator);
        phi.apply(cut.left);
        chi.apply(cut.left);
        total += 2.0 * matrix_element(phi, term.observable, chi).imag();
    }
    return total;
}

} // namespace

double gate_derivative(const CostSpec &cost_spec, std::size_t n_qubits,
                       const GateSequence &gates, std::size_t gate_index,
                       GradientMethod method, double fd_step) {
    cost_spec.validate(n_qubits);
    switch (method) {
    case GradientMethod::Commutator:
        return commutator_derivative(cost_spec, n_qubits, gates, gate_index);
    case GradientMethod::ParameterShift:
        return shifted_difference(cost_spec, n_qubits, gates, gate_index,
                                  std::numbers::pi / 4);
    case GradientMethod::FiniteDifference:
        if (!(fd_step > 0.0)) {
            throw DomainError("finite-difference step must be positive");
        }
        return shifted_difference(cost_spec, n_qubits, gates, gate_index, fd_step) /
               (2.0 * fd_step);
    }
    throw PreconditionError("unknown gradient method");
}

std::vector<double> rotation_gradients(const CostSpec &cost_spec, std::size_t n_qubits,
                                       const GateSequence &gates) {
    cost_spec.validate(n_qubits);
    std::vector<double> grad(gates.size(), 0.0);
    for (const auto &term : cost_spec.terms) {
        StateVector phi = term.state.prepare(n_qubits);
        phi.apply(gates);
        std::vector<cplx> h_phi(phi.dim());
        term.observable.apply(phi.amplitudes(), h_phi);
        StateVector lambda = StateVector::from_amplitudes_unchecked(std::move(h_phi));
        for (std::size_t j = gates.size(); j-- > 0;) {
            const Gate &g = gates[j];
            if (const auto *r = std::get_if<Rotation>(&g)) {
                StateVector v = phi;
                v.apply_pauli(PauliTerm{1.0, {PauliFactor{r->qubit, r->axis}}});
                grad[j] += 2.0 * lambda.inner(v).imag();
            }
            phi.apply_adjoint(std::span<const Gate>(&g, 1));
            lambda.apply_adjoint(std::span<const Gate>(&g, 1));
        }
    }
    return grad;
}

double partial_derivative(const CostSpec &cost_spec, const AnsatzSpec &ansatz,
                          const ParameterAssignment &assignment, Slot target,
                          GradientOptions options) {
    ansatz.check_slot(target);
    const GateSequence gates = realize_circuit(ansatz, assignment);
    if (options.mode == DerivativeMode::GateLevel) {
        return gate_derivative(cost_spec, ansatz.n_qubits, gates,
                               ansatz.gate_index(target), options.method,
                               options.fd_step);
    }
    const auto &group = assignment.groups[ansatz.group_of(target)];
    if (options.method == GradientMethod::Commutator && group.size() > 1) {
        const auto grad = rotation_gradients(cost_spec, ansatz.n_qubits, gates);
        double sum = 0.0;
        for (const Slot &s : group) {
            sum += grad[ansatz.gate_index(s)];
        }
        return sum;
    }
    double total = 0.0;
    for (const Slot &s : group) {
        total += gate_derivative(cost_spec, ansatz.n_qubits, gates, ansatz.gate_index(s),
                                 options.method, options.fd_step);
    }
    return total;
}

} // namespace plateau
