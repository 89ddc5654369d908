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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "plateau/core/dense.hpp"
#include "plateau/core/pauli.hpp"
#include "plateau/core/state_vector.hpp"
#include "plateau/errors.hpp"
#include "plateau/rng.hpp"

namespace plateau {
namespace {

constexpr double kPi = std::numbers::pi;

GateSequence random_gates(std::size_t n, std::size_t count, Rng &rng) {
    GateSequence gates;
    for (std::size_t i = 0; i < count; ++i) {
        if (n >= 2 && rng.below(3) == 0) {
            const auto a = rng.below(n);
            auto b = rng.below(n - 1);
            if (b >= a) {
                ++b;
            }
            gates.emplace_back(CPhase{a, b});
        } else {
            gates.emplace_back(Rotation{rng.below(n), static_cast<Axis>(rng.below(3)),
                                        rng.uniform(-kPi, kPi)});
        }
    }
    return gates;
}

TEST(Rotation, ZeroAngleIsIdentity) {
    const auto s = apply_rotation(StateVector(1), 0, Axis::Y, 0.0);
    EXPECT_EQ(s[0], cplx(1.0, 0.0));
    EXPECT_EQ(s[1], cplx(0.0, 0.0));
}

TEST(Rotation, YQuarterTurnFlipsZ) {
    const auto s = apply_rotation(StateVector(1), 0, Axis::Y, kPi / 2);
    EXPECT_NEAR(expectation(s, Observable::single(1, 0, Axis::Z)), -1.0, 1e-12);
}

TEST(Rotation, ZOnZeroKeepsZ) {
    const auto s = apply_rotation(StateVector(1), 0, Axis::Z, 0.73);
    EXPECT_NEAR(expectation(s, Observable::single(1, 0, Axis::Z)), 1.0, 1e-12);
}

TEST(Rotation, BlochClosedForm) {
    for (double t : {0.1, 0.5, 1.3, 2.9}) {
        const auto s = apply_rotation(StateVector(1), 0, Axis::X, t);
        EXPECT_NEAR(expectation(s, Observable::single(1, 0, Axis::Z)),
                    std::cos(2 * t), 1e-12);
    }
}

TEST(Rotation, QubitOutOfRange) {
    EXPECT_THROW((void)apply_rotation(StateVector(2), 2, Axis::X, 0.1), IndexError);
}

TEST(Ladder, Examples) {
    auto s00 = apply_cphase_ladder(StateVector::basis(2, 0));
    EXPECT_EQ(s00[0], cplx(1.0, 0.0));
    auto s11 = apply_cphase_ladder(StateVector::basis(2, 3));
    EXPECT_EQ(s11[3], cplx(-1.0, 0.0));
    auto s111 = apply_cphase_ladder(StateVector::basis(3, 7));
    EXPECT_EQ(s111[7], cplx(1.0, 0.0));
    auto s110 = apply_cphase_ladder(StateVector::basis(3, 6));
    EXPECT_EQ(s110[6], cplx(-1.0, 0.0));
}

TEST(Ladder, NeedsTwoQubits) {
    EXPECT_THROW((void)apply_cphase_ladder(StateVector(1)), PreconditionError);
}

TEST(Ladder, MatchesExplicitGates) {
    Rng rng(3);
    for (std::size_t n = 2; n <= 6; ++n) {
        StateVector a(n);
        a.apply(random_gates(n, 40, rng));
        StateVector b = a;
        a.apply_cphase_ladder();
        GateSequence ladder;
        for (std::size_t q = 0; q + 1 < n; ++q) {
            ladder.emplace_back(CPhase{q, q + 1});
        }
        b.apply(ladder);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            EXPECT_LT(std::abs(a[i] - b[i]), 1e-14);
        }
    }
}

TEST(Expectation, Examples) {
    EXPECT_NEAR(expectation(StateVector(3), Observable::global_z(3)), 1.0, 1e-15);
    EXPECT_NEAR(expectation(StateVector::basis(2, 1), Observable::local_z(2)), -1.0,
                1e-15);
    StateVector s(2);
    s.apply(Rotation{0, Axis::Y, kPi / 8}).apply(Rotation{1, Axis::Y, kPi / 8});
    EXPECT_NEAR(expectation(s, Observable::global_z(2)), 0.5, 1e-12);
}

TEST(Expectation, ShapeMismatch) {
    EXPECT_THROW((void)expectation(StateVector(2), Observable::global_z(3)), ShapeError);
}

TEST(Pauli, ParseAndValidate) {
    const auto t = parse_pauli_string("X0 Y2", -0.5);
    EXPECT_EQ(t.factors.size(), 2U);
    EXPECT_THROW(t.validate(2), IndexError);
    EXPECT_THROW(parse_pauli_string("Z0 Z0").validate(2), IndexError);
    EXPECT_THROW((void)parse_pauli_string("Q1"), ParseError);
    EXPECT_TRUE(parse_pauli_string("I").factors.empty());
}

TEST(Observable, NormsAndTrace) {
    const Observable h(2, {parse_pauli_string("Z0 Z1", 0.5), parse_pauli_string("I", 2.0)});
    EXPECT_DOUBLE_EQ(h.trace(), 8.0);
    EXPECT_DOUBLE_EQ(h.hs_norm_squared(), 4.0 * (0.25 + 4.0));
    const auto dense = observable_to_dense(h);
    EXPECT_NEAR(dense.trace().real(), 8.0, 1e-14);
    EXPECT_NEAR((dense.matrix() * dense.matrix()).trace().real(), h.hs_norm_squared(),
                1e-12);
}

TEST(Observable, DenseMatchesKernel) {
    Rng rng(11);
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<PauliTerm> terms;
        for (int k = 0; k < 4; ++k) {
            PauliTerm t;
            t.coefficient = rng.uniform(-1.0, 1.0);
            for (std::size_t q = 0; q < n; ++q) {
                const auto a = rng.below(4);
                if (a < 3) {
                    t.factors.push_back({q, static_cast<Axis>(a)});
                }
            }
            terms.push_back(t);
        }
        const Observable h(n, terms);
        const auto dense = observable_to_dense(h);
        EXPECT_TRUE(dense.is_hermitian());
        StateVector s(n);
        s.apply(random_gates(n, 30, rng));
        Eigen::Map<const Eigen::VectorXcd> v(s.amplitudes().data(),
                                             static_cast<Eigen::Index>(s.dim()));
        const cplx q = v.dot(dense.matrix() * v);
        EXPECT_NEAR(expectation(s, h), q.real(), 1e-10);
    }
}

TEST(Dense, EmptyIsIdentity) {
    const auto u = dense_circuit_unitary({}, 3);
    EXPECT_TRUE(u.matrix().isApprox(ComplexMatrix::Identity(8, 8)));
}

TEST(Dense, SingleRy) {
    const double t = 0.37;
    const auto u = dense_circuit_unitary({Rotation{0, Axis::Y, t}}, 1);
    ComplexMatrix expected(2, 2);
    expected << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    EXPECT_LT((u.matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Dense, CapGuard) {
    EXPECT_THROW((void)dense_circuit_unitary({}, 7), ResourceGuardError);
    EXPECT_NO_THROW((void)dense_circuit_unitary({}, 7, 7));
}

TEST(Dense, GatewiseEquivalence) {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const auto gates = random_gates(n, 25, rng);
        const auto u = dense_circuit_unitary(gates, n);
        StateVector s(n);
        s.apply(Rotation{0, Axis::X, 0.3});
        const auto via_dense = u.apply(s);
        s.apply(gates);
        for (std::size_t i = 0; i < s.dim(); ++i) {
            EXPECT_LE(std::abs(s[i] - via_dense[i]), 1e-10);
        }
        EXPECT_LE((circuit_matrix(gates, n) - u.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(StateVector, NormPreservedLongCircuit) {
    Rng rng(19);
    StateVector s(12);
    s.apply(random_gates(12, 10000, rng));
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-8);
}

TEST(StateVector, AdjointUndoes) {
    Rng rng(23);
    const auto gates = random_gates(4, 50, rng);
    StateVector s(4);
    s.apply(gates).apply_adjoint(gates);
    EXPECT_NEAR(std::abs(s[0]), 1.0, 1e-12);
}

TEST(StateVector, FromAmplitudesChecks) {
    EXPECT_THROW((void)StateVector::from_amplitudes({1.0, 0.0, 0.0}), ShapeError);
    EXPECT_THROW((void)StateVector::from_amplitudes({1.0, 1.0}), DomainError);
}

TEST(Haar, Unitarity) {
    Rng rng(1);
    for (std::size_t d : {1, 2, 3, 8, 16}) {
        const auto u = haar_random_unitary(d, rng);
        EXPECT_TRUE(u.is_unitary());
        EXPECT_LE((u.matrix().adjoint() * u.matrix() -
                   ComplexMatrix::Identity(u.matrix().rows(), u.matrix().rows()))
                      .cwiseAbs()
                      .maxCoeff(),
                  1e-10);
    }
}

TEST(Haar, LowMoments) {
    Rng rng(2024);
    const int n = 100000;
    double s2 = 0, s2sq = 0, s4 = 0, s4sq = 0;
    for (int i = 0; i < n; ++i) {
        const auto u = haar_random_unitary(2, rng);
        const double p = std::norm(u.matrix()(0, 0));
        s2 += p;
        s2sq += p * p;
        s4 += p * p;
        s4sq += p * p * p * p;
    }
    const double m2 = s2 / n, m4 = s4 / n;
    const double e2 = std::sqrt((s2sq / n - m2 * m2) / (n - 1));
    const double e4 = std::sqrt((s4sq / n - m4 * m4) / (n - 1));
    EXPECT_LE(std::abs(m2 - 0.5), 5 * e2);
    EXPECT_LE(std::abs(m4 - 1.0 / 3.0), 5 * e4);
}

TEST(Haar, LeftInvariance) {
    Rng rng(77);
    const std::size_t d = 4;
    const auto a = haar_random_unitary(d, rng).matrix();
    const ComplexMatrix x = ginibre_matrix(d, d, rng);
    const ComplexMatrix y = ginibre_matrix(d, d, rng);
    const int n = 20000;
    std::vector<double> diff(n);
    double sum = 0, sumsq = 0;
    for (int i = 0; i < n; ++i) {
        const auto u = haar_random_unitary(d, rng).matrix();
        const ComplexMatrix uxu = u * x * u.adjoint();
        const ComplexMatrix auxu = a * uxu * a.adjoint();
        const double v = ((auxu - uxu) * y).trace().real();
        sum += v;
        sumsq += v * v;
    }
    const double m = sum / n;
    const double se = std::sqrt((sumsq / n - m * m) / (n - 1));
    EXPECT_LE(std::abs(m), 5 * se);
}

TEST(Swap, Properties) {
    for (std::size_t d : {2, 3}) {
        const auto w = swap_operator(d);
        EXPECT_NEAR(w.trace().real(), static_cast<double>(d), 1e-15);
        const auto dd = static_cast<Eigen::Index>(d * d);
        EXPECT_EQ(w.matrix() * w.matrix(), ComplexMatrix::Identity(dd, dd));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                EXPECT_EQ(w.matrix()(static_cast<Eigen::Index>(j * d + i),
                                     static_cast<Eigen::Index>(i * d + j)),
                          cplx(1.0, 0.0));
            }
        }
    }
    Rng rng(8);
    StateVector s(1);
    s.apply(Rotation{0, Axis::X, 0.4}).apply(Rotation{0, Axis::Z, 1.1});
    const auto rho = projector(s).matrix();
    const cplx t = (kron(rho, rho) * swap_operator(2).matrix()).trace();
    EXPECT_NEAR(t.real(), 1.0, 1e-14);
}

TEST(DenseOperatorFlags, Detect) {
    ComplexMatrix m(2, 2);
    m << 1.0, cplx(0, 1), cplx(0, -1), 2.0;
    const DenseOperator op(m);
    EXPECT_TRUE(op.is_hermitian());
    EXPECT_FALSE(op.is_unitary());
    EXPECT_THROW(DenseOperator(ComplexMatrix(2, 3)), ShapeError);
}

} // namespace
} // namespace plateau
