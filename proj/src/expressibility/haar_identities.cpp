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

#include "plateau/expressibility/haar_identities.hpp"

#include <array>
#include <cmath>

#include "plateau/errors.hpp"
#include "plateau/gradients/statistics.hpp"
#include "plateau/parallel.hpp"

namespace plateau {

namespace {

constexpr std::array<HaarIdentity, 4> kIdentities{HaarIdentity::Single, HaarIdentity::Chain,
                                                  HaarIdentity::Product,
                                                  HaarIdentity::TwoCopy};

ComplexMatrix draw_operand(std::size_t dim, Rng &rng, OperandKind kind) {
    const auto n = static_cast<Eigen::Index>(dim);
    if (kind == OperandKind::Centered) {
        return ginibre_matrix(dim, dim, rng);
    }
    return ComplexMatrix::Identity(n, n) +
           0.5 * ginibre_matrix(dim, dim, rng, 1.0 / static_cast<double>(dim));
}

} // namespace

std::string identity_name(HaarIdentity id) {
    switch (id) {
    case HaarIdentity::Single:
        return "single-trace";
    case HaarIdentity::Chain:
        return "chained-trace";
    case HaarIdentity::Product:
        return "trace-product";
    case HaarIdentity::TwoCopy:
        return "two-copy-swap";
    }
    return "?";
}

IdentityOperands random_operands(std::size_t d, Rng &rng, OperandKind kind) {
    IdentityOperands ops;
    ops.a = draw_operand(d, rng, kind);
    ops.b = draw_operand(d, rng, kind);
    ops.c = draw_operand(d, rng, kind);
    ops.d = draw_operand(d, rng, kind);
    ops.a2 = draw_operand(d * d, rng, kind);
    ops.b2 = draw_operand(d * d, rng, kind);
    return ops;
}

cplx identity_closed_form(HaarIdentity id, const IdentityOperands &ops) {
    const double d = static_cast<double>(ops.a.rows());
    const double k1 = d * d - 1.0;
    const double k2 = d * (d * d - 1.0);
    const cplx ta = ops.a.trace(), tb = ops.b.trace(), tc = ops.c.trace(), td = ops.d.trace();
    switch (id) {
    case HaarIdentity::Single:
        return ta * tb / d;
    case HaarIdentity::Chain: {
        const cplx tac = (ops.a * ops.c).trace(), tbd = (ops.b * ops.d).trace();
        return (ta * tc * tbd + tac * tb * td) / k1 - (tac * tbd + ta * tb * tc * td) / k2;
    }
    case HaarIdentity::Product: {
        const cplx tac = (ops.a * ops.c).trace(), tbd = (ops.b * ops.d).trace();
        return (ta * tb * tc * td + tac * tbd) / k1 - (tac * tb * td + ta * tc * tbd) / k2;
    }
    case HaarIdentity::TwoCopy: {
        const ComplexMatrix w = swap_operator(static_cast<std::size_t>(ops.a.rows())).matrix();
        const cplx tA = ops.a2.trace(), tB = ops.b2.trace();
        const cplx tAW = (ops.a2 * w).trace(), tBW = (ops.b2 * w).trace();
        return (tA * tB + tAW * tBW) / k1 - (tAW * tB + tA * tBW) / k2;
    }
    }
    throw PreconditionError("unknown identity");
}

cplx identity_integrand(HaarIdentity id, const IdentityOperands &ops, const ComplexMatrix &u) {
    switch (id) {
    case HaarIdentity::Single:
        return (u * ops.a * u.adjoint() * ops.b).trace();
    case HaarIdentity::Chain:
        return (u * ops.a * u.adjoint() * ops.b * u * ops.c * u.adjoint() * ops.d).trace();
    case HaarIdentity::Product:
        return (u * ops.a * u.adjoint() * ops.b).trace() *
               (u * ops.c * u.adjoint() * ops.d).trace();
    case HaarIdentity::TwoCopy: {
        const ComplexMatrix uu = kron(u, u);
        return (ops.a2 * uu * ops.b2 * uu.adjoint()).trace();
    }
    }
    throw PreconditionError("unknown identity");
}

bool IdentityCheck::passed() const noexcept {
    const double dev = std::abs(monte_carlo - analytic);
    return dev <= sigma_tolerance * std_error && relative_error <= relative_tolerance;
}

bool IdentityReport::passed() const noexcept {
    for (const auto &c : checks) {
        if (!c.passed()) {
            return false;
        }
    }
    return !checks.empty();
}

IdentityReport verify_haar_identities(std::size_t d, std::size_t n_samples, std::uint64_t seed,
                                      std::size_t n_tuples, OperandKind kind,
                                      std::size_t threads) {
    if (d < 2) {
        throw PreconditionError("identity check needs d >= 2");
    }
    if (n_samples < 2) {
        throw PreconditionError("identity check needs at least 2 samples");
    }
    IdentityReport report;
    report.dim = d;
    report.n_samples = n_samples;
    for (std::size_t t = 0; t < n_tuples; ++t) {
        Rng op_rng = Rng::stream(seed, 2 * t);
        const IdentityOperands ops = random_operands(d, op_rng, kind);
        const std::uint64_t sample_seed = derive_seed(seed, 2 * t + 1);
        std::array<std::vector<double>, 4> re, im;
        for (std::size_t k = 0; k < 4; ++k) {
            re[k].resize(n_samples);
            im[k].resize(n_samples);
        }
        parallel_for(n_samples, resolve_threads(threads), [&](std::size_t i) {
            Rng rng = Rng::stream(sample_seed, i);
            const ComplexMatrix u = haar_random_unitary(d, rng).matrix();
            for (std::size_t k = 0; k < 4; ++k) {
                const cplx v = identity_integrand(kIdentities[k], ops, u);
                re[k][i] = v.real();
                im[k][i] = v.imag();
            }
        });
        for (std::size_t k = 0; k < 4; ++k) {
            const VarianceReport sr = summarize(re[k]);
            const VarianceReport si = summarize(im[k]);
            IdentityCheck c;
            c.id = kIdentities[k];
            c.tuple = t;
            c.analytic = identity_closed_form(c.id, ops);
            c.monte_carlo = cplx(sr.mean, si.mean);
            c.std_error = std::hypot(sr.mean_stderr, si.mean_stderr);
            const double scale = std::abs(c.analytic);
            c.relative_error = scale > 0.0 ? std::abs(c.monte_carlo - c.analytic) / scale
                                           : std::abs(c.monte_carlo);
            report.checks.push_back(c);
        }
    }
    return report;
}

} // namespace plateau
