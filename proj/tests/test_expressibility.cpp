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

#include <gtest/gtest.h>

#include "plateau/errors.hpp"
#include "plateau/expressibility/ensemble.hpp"
#include "plateau/expressibility/frame_potential.hpp"
#include "plateau/expressibility/haar_identities.hpp"

namespace plateau {
namespace {

AnsatzSpec make_spec(std::size_t n, std::size_t d,
                     CorrelationScheme scheme = CorrelationScheme::Independent) {
    AnsatzSpec s;
    s.n_qubits = n;
    s.depth = d;
    s.scheme = scheme;
    return s;
}

EnsembleSampler identity_ensemble(std::size_t n) {
    return EnsembleSampler::fixed({DenseOperator::identity(std::size_t{1} << n)});
}

TEST(HaarFramePotential, ClosedForms) {
    EXPECT_NEAR(haar_frame_potential(FrameOperator::state(StateVector(1))), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(haar_frame_potential(FrameOperator::observable(Observable::global_z(1))),
                4.0 / 3.0, 1e-15);
    EXPECT_NEAR(haar_frame_potential(2.0, 2.0, 2), 4.0, 1e-14);
    EXPECT_NEAR(haar_frame_potential(FrameOperator::dense(DenseOperator::identity(2))), 4.0,
                1e-14);
}

TEST(HaarFramePotential, IdentityOperatorMonteCarlo) {
    const auto x = FrameOperator::dense(DenseOperator::identity(2));
    const auto fp = frame_potential(x, EnsembleSampler::haar(1), 100, 4);
    EXPECT_NEAR(fp.value, haar_frame_potential(x), 1e-12);
}

TEST(HaarFramePotential, FiducialFormMatchesGeneral) {
    for (std::size_t n = 1; n <= 12; ++n) {
        const double d = std::ldexp(1.0, static_cast<int>(n));
        EXPECT_NEAR(fiducial_haar_frame_potential(n), haar_frame_potential(1.0, 1.0,
                                                                           std::size_t{1} << n),
                    1e-15 / d);
    }
}

TEST(FrameOperator, RejectsNonHermitian) {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    EXPECT_THROW((void)FrameOperator::dense(DenseOperator(m)), DomainError);
}

TEST(FramePotential, SingleElementEnsemble) {
    const auto x = FrameOperator::state(StateVector(1));
    const auto fp = frame_potential(x, identity_ensemble(1), 50, 1);
    EXPECT_DOUBLE_EQ(fp.value, 1.0);
    EXPECT_EQ(fp.std_error, 0.0);
    const auto rep = expressibility_report(x, identity_ensemble(1), 50, 1);
    EXPECT_NEAR(rep.epsilon, std::sqrt(2.0 / 3.0), 1e-12);
    EXPECT_FALSE(rep.clamped);
    EXPECT_NEAR(rep.ratio, 3.0, 1e-12);
    EXPECT_NEAR(dense_epsilon_oracle(x, identity_ensemble(1), 3, 1), std::sqrt(2.0 / 3.0),
                1e-12);
}

TEST(FramePotential, HaarStateAndPauli) {
    const auto sampler = EnsembleSampler::haar(1);
    const auto fs = frame_potential(FrameOperator::state(StateVector(1)), sampler, 100000, 2);
    EXPECT_LE(std::abs(fs.value - 1.0 / 3.0), 3 * fs.std_error);
    const auto fz = frame_potential(FrameOperator::observable(Observable::global_z(1)),
                                    sampler, 100000, 3);
    EXPECT_LE(std::abs(fz.value - 4.0 / 3.0), 3 * fz.std_error);
}

TEST(FramePotential, HaarReportSometimesClamps) {
    int clamped = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto r = expressibility_report(FrameOperator::state(StateVector(2)),
                                             EnsembleSampler::haar(2), 400, s);
        clamped += r.clamped ? 1 : 0;
        EXPECT_LE(r.epsilon, 0.2);
        if (r.clamped) {
            EXPECT_EQ(r.epsilon, 0.0);
            EXPECT_LT(r.difference, 0.0);
        }
    }
    EXPECT_GT(clamped, 0);
    EXPECT_LT(clamped, 20);
}

TEST(FramePotential, LowerBoundAcrossEnsembles) {
    for (auto scheme : {CorrelationScheme::Independent, CorrelationScheme::CorrelateAll}) {
        for (std::size_t depth : {1, 3, 10}) {
            const auto sampler = EnsembleSampler::ansatz(make_spec(3, depth, scheme));
            const auto x = FrameOperator::state(StateVector(3));
            const auto fp = frame_potential(x, sampler, 2000, depth);
            EXPECT_GE(fp.value, haar_frame_potential(x) - 3 * fp.std_error);
        }
    }
}

TEST(FramePotential, HeisenbergEqualsAdjointEnsemble) {
    Rng rng(4);
    std::vector<DenseOperator> members, adjoints;
    for (int i = 0; i < 5; ++i) {
        members.push_back(haar_random_unitary(4, rng));
        adjoints.push_back(members.back().adjoint());
    }
    const auto x = FrameOperator::observable(Observable::local_z(2));
    FrameOptions heis;
    heis.orientation = Orientation::Heisenberg;
    const auto a = frame_potential_stored(x, EnsembleSampler::fixed(members), 40, 9, heis);
    const auto b = frame_potential_stored(x, EnsembleSampler::fixed(adjoints), 40, 9);
    EXPECT_NEAR(a.value, b.value, 1e-12);
}

TEST(FramePotential, StateAndDenseRoutesAgree) {
    const auto sampler = EnsembleSampler::ansatz(make_spec(2, 3));
    StateVector psi(2);
    const auto via_state = frame_potential(FrameOperator::state(psi), sampler, 300, 5);
    const auto via_dense =
        frame_potential(FrameOperator::dense(projector(psi)), sampler, 300, 5);
    EXPECT_NEAR(via_state.value, via_dense.value, 1e-12);
}

TEST(FramePotential, StoredMatchesOracleAndPairs) {
    const std::vector<EnsembleSampler> samplers{
        EnsembleSampler::ansatz(make_spec(1, 2)),
        EnsembleSampler::ansatz(make_spec(2, 2)),
        EnsembleSampler::ansatz(make_spec(2, 6, CorrelationScheme::CorrelateAll)),
        EnsembleSampler::ansatz(make_spec(2, 10)),
        EnsembleSampler::haar(2),
    };
    for (std::size_t k = 0; k < samplers.size(); ++k) {
        const std::size_t n = samplers[k].n_qubits();
        for (const auto &x : {FrameOperator::state(StateVector(n)),
                              FrameOperator::observable(Observable::global_z(n))}) {
            const auto stored = frame_potential_stored(x, samplers[k], 400, 100 + k);
            const double haar = haar_frame_potential(x);
            const double oracle = dense_epsilon_oracle(x, samplers[k], 400, 100 + k);
            EXPECT_NEAR(oracle * oracle, stored.value - haar, 1e-10 * stored.value);
            const auto pairs = frame_potential(x, samplers[k], 4000, 200 + k);
            const double combined = std::hypot(pairs.std_error, stored.std_error);
            EXPECT_LE(std::abs(pairs.value - stored.value), 4 * combined + 1e-12);
        }
    }
}

TEST(Twirl, Examples) {
    const auto rho = projector(StateVector(1)).matrix();
    const auto t = dense_haar_twirl(DenseOperator(kron(rho, rho)));
    const ComplexMatrix expected =
        (ComplexMatrix::Identity(4, 4) + swap_operator(2).matrix()) / 6.0;
    EXPECT_LT((t.matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
    const auto id = dense_haar_twirl(DenseOperator::identity(9));
    EXPECT_LT((id.matrix() - ComplexMatrix::Identity(9, 9)).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_THROW((void)dense_haar_twirl(DenseOperator::identity(8)), ShapeError);
}

TEST(Twirl, MatchesMonteCarlo) {
    Rng rng(12);
    StateVector s(1);
    s.apply(Rotation{0, Axis::X, 0.3});
    const auto rho = projector(s).matrix();
    const ComplexMatrix x2 = kron(rho, rho);
    const auto analytic = dense_haar_twirl(DenseOperator(x2)).matrix();
    const int n = 10000;
    ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
    Eigen::MatrixXd sq_re = Eigen::MatrixXd::Zero(4, 4), sq_im = Eigen::MatrixXd::Zero(4, 4);
    for (int i = 0; i < n; ++i) {
        const auto u = haar_random_unitary(2, rng).matrix();
        const ComplexMatrix uu = kron(u, u);
        const ComplexMatrix y = uu * x2 * uu.adjoint();
        sum += y;
        sq_re += y.real().cwiseAbs2();
        sq_im += y.imag().cwiseAbs2();
    }
    const ComplexMatrix mean = sum / static_cast<double>(n);
    // Max over 32 real components, so allow a little beyond 3 sigma.
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            const double se_re =
                std::sqrt(std::max(0.0, sq_re(i, j) / n - std::pow(mean(i, j).real(), 2)) / n);
            const double se_im =
                std::sqrt(std::max(0.0, sq_im(i, j) / n - std::pow(mean(i, j).imag(), 2)) / n);
            EXPECT_LE(std::abs(mean(i, j).real() - analytic(i, j).real()), 4 * se_re + 1e-15);
            EXPECT_LE(std::abs(mean(i, j).imag() - analytic(i, j).imag()), 4 * se_im + 1e-15);
        }
    }
}

TEST(EpsilonOracle, HaarEnsembleSmall) {
    const auto x = FrameOperator::state(StateVector(2));
    const double e = dense_epsilon_oracle(x, EnsembleSampler::haar(2), 2000, 3);
    const auto stored = frame_potential_stored(x, EnsembleSampler::haar(2), 2000, 3);
    EXPECT_LE(e * e, 3 * stored.std_error + 1.0 / 2000);
    EXPECT_THROW((void)dense_epsilon_oracle(FrameOperator::state(StateVector(4)),
                                            EnsembleSampler::haar(4), 2, 1),
                 ResourceGuardError);
}

TEST(FramePotential, DepthRankOrderLocalCost) {
    const auto x = FrameOperator::observable(Observable::local_z(4));
    FrameOptions heis;
    heis.orientation = Orientation::Heisenberg;
    double prev = 1e300, prev_se = 0.0;
    for (std::size_t depth : {2, 5, 10, 20, 50, 100}) {
        const auto fp = frame_potential(x, EnsembleSampler::ansatz(make_spec(4, depth)), 1500,
                                        depth, heis);
        EXPECT_LE(fp.value, prev + 2 * std::hypot(fp.std_error, prev_se));
        prev = fp.value;
        prev_se = fp.std_error;
    }
}

TEST(HaarIdentities, ReducedClosedForms) {
    Rng rng(1);
    for (std::size_t d : {2, 4}) {
        auto ops = random_operands(d, rng, OperandKind::Centered);
        const auto n = static_cast<Eigen::Index>(d);
        ops.a = ComplexMatrix::Identity(n, n);
        ops.c = ComplexMatrix::Identity(n, n);
        EXPECT_LT(std::abs(identity_closed_form(HaarIdentity::Chain, ops) -
                           (ops.b * ops.d).trace()),
                  1e-12);
        EXPECT_LT(std::abs(identity_closed_form(HaarIdentity::Product, ops) -
                           ops.b.trace() * ops.d.trace()),
                  1e-12);
        ops.b = ComplexMatrix::Identity(n, n);
        EXPECT_LT(std::abs(identity_closed_form(HaarIdentity::Single, ops) -
                           static_cast<double>(d)),
                  1e-12);
    }
}

TEST(HaarIdentities, IntegrandsAtIdentityUnitary) {
    // With every operand the identity the integrand is constant in U.
    for (std::size_t d : {2, 3}) {
        const auto n = static_cast<Eigen::Index>(d);
        IdentityOperands ops;
        ops.a = ops.b = ops.c = ops.d = ComplexMatrix::Identity(n, n);
        ops.a2 = ops.b2 = ComplexMatrix::Identity(n * n, n * n);
        Rng rng(2);
        const auto u = haar_random_unitary(d, rng).matrix();
        for (auto id : {HaarIdentity::Single, HaarIdentity::Chain, HaarIdentity::Product,
                        HaarIdentity::TwoCopy}) {
            EXPECT_LT(std::abs(identity_integrand(id, ops, u) - identity_closed_form(id, ops)),
                      1e-11);
        }
    }
}

TEST(HaarIdentities, CenteredOperandsWithinFiveSigma) {
    for (std::size_t d : {2, 4}) {
        const auto rep = verify_haar_identities(d, 20000, 31 + d, 2, OperandKind::Centered);
        for (const auto &c : rep.checks) {
            EXPECT_LE(std::abs(c.monte_carlo - c.analytic), 5 * c.std_error)
                << identity_name(c.id) << " d=" << d;
        }
    }
}

TEST(HaarIdentities, ShiftedOperandsPass) {
    const auto rep = verify_haar_identities(2, 20000, 5, 1);
    for (const auto &c : rep.checks) {
        EXPECT_LE(std::abs(c.monte_carlo - c.analytic), 5 * c.std_error);
        EXPECT_LE(c.relative_error, 0.01);
    }
}

} // namespace
} // namespace plateau
