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

#include "plateau/core/dense.hpp"

#include <cmath>
#include <string>

#include <Eigen/QR>

#include "plateau/errors.hpp"

namespace plateau {

namespace {

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

} // namespace

DenseOperator::DenseOperator(ComplexMatrix matrix)
    : matrix_(std::move(matrix)), hermitian_(false), unitary_(false) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw ShapeError("dense operator must be square and non-empty");
    }
    hermitian_ = max_abs(matrix_ - matrix_.adjoint()) <= kHermitianTolerance;
    const auto n = matrix_.rows();
    unitary_ = max_abs(matrix_.adjoint() * matrix_ -
                       ComplexMatrix::Identity(n, n)) <= kUnitaryTolerance;
}

DenseOperator DenseOperator::identity(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return DenseOperator(ComplexMatrix::Identity(d, d));
}

DenseOperator DenseOperator::adjoint() const {
    return DenseOperator(matrix_.adjoint());
}

StateVector DenseOperator::apply(const StateVector &state) const {
    if (state.dim() != dim()) {
        throw ShapeError("operator and state dimensions differ");
    }
    Eigen::Map<const Eigen::VectorXcd> in(state.amplitudes().data(),
                                          static_cast<Eigen::Index>(dim()));
    const Eigen::VectorXcd out = matrix_ * in;
    std::vector<cplx> amps(out.data(), out.data() + out.size());
    return StateVector::from_amplitudes(std::move(amps));
}

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("operator dimensions differ");
    }
    return DenseOperator(a.matrix() * b.matrix());
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix pauli_matrix(Axis axis) {
    ComplexMatrix m(2, 2);
    switch (axis) {
    case Axis::X:
        m << 0.0, 1.0, 1.0, 0.0;
        break;
    case Axis::Y:
        m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
        break;
    case Axis::Z:
        m << 1.0, 0.0, 0.0, -1.0;
        break;
    }
    return m;
}

ComplexMatrix rotation_matrix(Axis axis, double angle) {
    // exp(-i a V) = cos(a) I - i sin(a) V for V^2 = I.
    return std::cos(angle) * ComplexMatrix::Identity(2, 2) -
           cplx(0.0, std::sin(angle)) * pauli_matrix(axis);
}

ComplexMatrix ginibre_matrix(std::size_t rows, std::size_t cols, Rng &rng,
                             double variance) {
    const double s = std::sqrt(variance / 2.0);
    ComplexMatrix z(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
        for (Eigen::Index i = 0; i < z.rows(); ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            z(i, j) = cplx(s * re, s * im);
        }
    }
    return z;
}

DenseOperator haar_random_unitary(std::size_t dim, Rng &rng) {
    if (dim == 0) {
        throw PreconditionError("Haar dimension must be positive");
    }
    const ComplexMatrix z = ginibre_matrix(dim, dim, rng);
    const Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix &r = qr.matrixQR();
    for (Eigen::Index i = 0; i < q.cols(); ++i) {
        const cplx rii = r(i, i);
        const double mag = std::abs(rii);
        q.col(i) *= mag > 0.0 ? rii / mag : cplx(1.0, 0.0);
    }
    return DenseOperator(std::move(q));
}

DenseOperator swap_operator(std::size_t d) {
    if (d == 0) {
        throw PreconditionError("swap subsystem dimension must be positive");
    }
    const auto dd = static_cast<Eigen::Index>(d * d);
    ComplexMatrix w = ComplexMatrix::Zero(dd, dd);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            w(static_cast<Eigen::Index>(j * d + i),
              static_cast<Eigen::Index>(i * d + j)) = 1.0;
        }
    }
    return DenseOperator(std::move(w));
}

void check_dense_cap(std::size_t n_qubits, std::size_t cap) {
    if (n_qubits > cap) {
        throw ResourceGuardError("dense path requested for " +
                                 std::to_string(n_qubits) +
                                 " qubits, cap is " + std::to_string(cap));
    }
}

namespace {

// Full-register matrix of a single-qubit operator on `qubit`.
ComplexMatrix embed_single(const ComplexMatrix &op, std::size_t qubit,
                           std::size_t n_qubits) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        out = kron(out, q == qubit ? op : ComplexMatrix::Identity(2, 2));
    }
    return out;
}

ComplexMatrix cphase_matrix(std::size_t a, std::size_t b, std::size_t n_qubits) {
    // CZ = |0><0|_a (x) I + |1><1|_a (x) Z_b
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    ComplexMatrix t0 = ComplexMatrix::Identity(1, 1);
    ComplexMatrix t1 = ComplexMatrix::Identity(1, 1);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
        t0 = kron(t0, q == a ? p0 : id);
        t1 = kron(t1, q == a ? p1 : (q == b ? pauli_matrix(Axis::Z) : id));
    }
    return t0 + t1;
}

} // namespace

DenseOperator dense_circuit_unitary(const GateSequence &gates,
                                    std::size_t n_qubits, std::size_t cap) {
    check_dense_cap(n_qubits, cap);
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    ComplexMatrix u = ComplexMatrix::Identity(d, d);
    for (const Gate &g : gates) {
        if (const auto *r = std::get_if<Rotation>(&g)) {
            if (r->qubit >= n_qubits) {
                throw IndexError("rotation qubit out of range");
            }
            u = embed_single(rotation_matrix(r->axis, r->angle), r->qubit,
                             n_qubits) *
                u;
        } else {
            const auto &cz = std::get<CPhase>(g);
            if (cz.control >= n_qubits || cz.target >= n_qubits) {
                throw IndexError("C-Phase qubit out of range");
            }
            u = cphase_matrix(cz.control, cz.target, n_qubits) * u;
        }
    }
    DenseOperator out(std::move(u));
    if (!out.is_unitary()) {
        throw NumericError("dense circuit product lost unitarity");
    }
    return out;
}

ComplexMatrix circuit_matrix(std::span<const Gate> gates, std::size_t n_qubits,
                             std::size_t cap) {
    check_dense_cap(n_qubits, cap);
    const std::size_t dim = std::size_t{1} << n_qubits;
    const auto d = static_cast<Eigen::Index>(dim);
    ComplexMatrix u = ComplexMatrix::Identity(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        kernels::apply_gates(std::span<cplx>(u.col(c).data(), dim), n_qubits, gates);
    }
    return u;
}

DenseOperator observable_to_dense(const Observable &observable,
                                  std::size_t cap) {
    const std::size_t n = observable.n_qubits();
    check_dense_cap(n, cap);
    const auto d = static_cast<Eigen::Index>(observable.dim());
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (const auto &t : observable.terms()) {
        ComplexMatrix p = ComplexMatrix::Identity(1, 1);
        for (std::size_t q = 0; q < n; ++q) {
            ComplexMatrix f = ComplexMatrix::Identity(2, 2);
            for (const auto &factor : t.factors) {
                if (factor.qubit == q) {
                    f = pauli_matrix(factor.axis);
                }
            }
            p = kron(p, f);
        }
        h += t.coefficient * p;
    }
    return DenseOperator(std::move(h));
}

DenseOperator projector(const StateVector &state, std::size_t cap) {
    check_dense_cap(state.n_qubits(), cap);
    Eigen::Map<const Eigen::VectorXcd> v(state.amplitudes().data(),
                                         static_cast<Eigen::Index>(state.dim()));
    return DenseOperator(v * v.adjoint());
}

} // namespace plateau
