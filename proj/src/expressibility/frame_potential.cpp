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

#include "plateau/expressibility/frame_potential.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "plateau/errors.hpp"
#include "plateau/gradients/statistics.hpp"
#include "plateau/parallel.hpp"

namespace plateau {

FrameOperator FrameOperator::state(StateVector psi) {
    const std::size_t n = psi.n_qubits();
    return FrameOperator(n, std::move(psi));
}

FrameOperator FrameOperator::observable(Observable h) {
    const std::size_t n = h.n_qubits();
    return FrameOperator(n, std::move(h));
}

FrameOperator FrameOperator::dense(DenseOperator x) {
    if (!x.is_hermitian()) {
        throw DomainError("frame potential operator must be Hermitian");
    }
    const std::size_t dim = x.dim();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw ShapeError("frame potential operator dimension must be a power of two");
    }
    return FrameOperator(static_cast<std::size_t>(std::countr_zero(dim)), std::move(x));
}

double FrameOperator::trace() const {
    if (is_state()) {
        return 1.0;
    }
    if (const auto *h = std::get_if<Observable>(&repr_)) {
        return h->trace();
    }
    return std::get<DenseOperator>(repr_).trace().real();
}

double FrameOperator::trace_squared() const {
    if (is_state()) {
        return 1.0;
    }
    if (const auto *h = std::get_if<Observable>(&repr_)) {
        return h->hs_norm_squared();
    }
    const auto &m = std::get<DenseOperator>(repr_).matrix();
    return m.cwiseAbs2().sum();
}

ComplexMatrix FrameOperator::matrix(std::size_t cap) const {
    if (is_state()) {
        return projector(as_state(), cap).matrix();
    }
    if (const auto *h = std::get_if<Observable>(&repr_)) {
        return observable_to_dense(*h, cap).matrix();
    }
    check_dense_cap(n_qubits_, cap);
    return std::get<DenseOperator>(repr_).matrix();
}

namespace {

// X evolved by one ensemble member, in whichever representation X uses.
using Evolved = std::variant<ComplexMatrix, StateVector>;

Evolved evolve(const FrameOperator &x, const SampledUnitary &u, const FrameOptions &opt,
               const ComplexMatrix *x_dense) {
    if (u.n_qubits != x.n_qubits()) {
        throw ShapeError("ensemble and operator act on different qubit counts");
    }
    if (x.is_state()) {
        StateVector s = x.as_state();
        if (opt.orientation == Orientation::Forward) {
            u.apply(s);
        } else {
            u.apply_adjoint(s);
        }
        return s;
    }
    const ComplexMatrix m = u.matrix(opt.dense_cap);
    if (opt.orientation == Orientation::Forward) {
        return ComplexMatrix(m * (*x_dense) * m.adjoint());
    }
    return ComplexMatrix(m.adjoint() * (*x_dense) * m);
}

double overlap_squared(const Evolved &a, const Evolved &b) {
    if (const auto *sa = std::get_if<StateVector>(&a)) {
        return std::pow(std::norm(sa->inner(std::get<StateVector>(b))), 2);
    }
    const auto &ma = std::get<ComplexMatrix>(a);
    const auto &mb = std::get<ComplexMatrix>(b);
    // Tr[M N] for Hermitian M, N is sum_ij M_ij conj(N_ij).
    const double t = (ma.array() * mb.conjugate().array()).sum().real();
    return t * t;
}

std::optional<ComplexMatrix> dense_or_none(const FrameOperator &x, const FrameOptions &opt) {
    if (x.is_state()) {
        return std::nullopt;
    }
    return x.matrix(opt.dense_cap);
}

} // namespace

FramePotentialEstimate frame_potential(const FrameOperator &x, const EnsembleSampler &sampler,
                                       std::size_t n_pairs, std::uint64_t seed,
                                       FrameOptions options) {
    if (n_pairs < 2) {
        throw PreconditionError("frame potential needs at least 2 pairs");
    }
    const auto xd = dense_or_none(x, options);
    const ComplexMatrix *xp = xd ? &*xd : nullptr;
    std::vector<double> terms(n_pairs);
    parallel_for(n_pairs, resolve_threads(options.threads), [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        const SampledUnitary u = sampler.draw(rng);
        const SampledUnitary v = sampler.draw(rng);
        terms[i] = overlap_squared(evolve(x, u, options, xp), evolve(x, v, options, xp));
    });
    const VarianceReport r = summarize(terms);
    return {r.mean, r.mean_stderr, n_pairs};
}

FramePotentialEstimate frame_potential_stored(const FrameOperator &x,
                                              const EnsembleSampler &sampler,
                                              std::size_t n_members, std::uint64_t seed,
                                              FrameOptions options) {
    if (n_members < 2) {
        throw PreconditionError("stored ensemble needs at least 2 members");
    }
    const auto xd = dense_or_none(x, options);
    const ComplexMatrix *xp = xd ? &*xd : nullptr;
    std::vector<Evolved> members(n_members);
    parallel_for(n_members, resolve_threads(options.threads), [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        members[i] = evolve(x, sampler.draw(rng), options, xp);
    });
    // K_ij is symmetric; rows[k] = sum_j K_kj.
    std::vector<double> rows(n_members, 0.0);
    std::vector<double> diag(n_members);
    parallel_for(n_members, resolve_threads(options.threads), [&](std::size_t i) {
        std::vector<double> row(n_members);
        for (std::size_t j = 0; j < n_members; ++j) {
            row[j] = overlap_squared(members[i], members[j]);
        }
        diag[i] = row[i];
        rows[i] = pairwise_sum(row);
    });
    const double total = pairwise_sum(rows);
    const double nd = static_cast<double>(n_members);
    FramePotentialEstimate out;
    out.value = total / (nd * nd);
    out.n_pairs = n_members * n_members;
    std::vector<double> loo(n_members);
    for (std::size_t k = 0; k < n_members; ++k) {
        loo[k] = (total - 2.0 * rows[k] + diag[k]) / ((nd - 1.0) * (nd - 1.0));
    }
    const double loo_mean = pairwise_sum(loo) / nd;
    for (auto &v : loo) {
        v = (v - loo_mean) * (v - loo_mean);
    }
    out.std_error = std::sqrt((nd - 1.0) / nd * pairwise_sum(loo));
    return out;
}

double haar_frame_potential(double tr_x, double tr_x2, std::size_t dim) {
    const double d = static_cast<double>(dim);
    if (dim < 2) {
        throw PreconditionError("Haar frame potential needs dim >= 2");
    }
    const double t2 = tr_x * tr_x;
    return (t2 * t2 + tr_x2 * tr_x2) / (d * d - 1.0) - 2.0 * tr_x2 * t2 / (d * (d * d - 1.0));
}

double fiducial_haar_frame_potential(std::size_t n_qubits) {
    const double d = std::ldexp(1.0, static_cast<int>(n_qubits));
    return 1.0 / ((d + 1.0) * d / 2.0);
}

double haar_frame_potential(const FrameOperator &x) {
    const double general = haar_frame_potential(x.trace(), x.trace_squared(), x.dim());
    if (x.is_state()) {
        const double special = fiducial_haar_frame_potential(x.n_qubits());
        if (std::abs(general - special) > 1e-12 * special) {
            throw NumericError("pure-state Haar frame potential forms disagree");
        }
        return special;
    }
    return general;
}

ExpressibilityReport make_expressibility_report(FramePotentialEstimate fp, double haar_value) {
    ExpressibilityReport r;
    r.frame_potential = fp;
    r.haar_value = haar_value;
    r.difference = fp.value - haar_value;
    r.clamped = r.difference < 0.0;
    r.epsilon = std::sqrt(std::max(0.0, r.difference));
    // Delta method, capped at the epsilon one standard error above zero.
    const double cap = std::sqrt(fp.std_error);
    r.epsilon_stderr = r.epsilon > 0.0 ? std::min(fp.std_error / (2.0 * r.epsilon), cap) : cap;
    r.ratio = haar_value > 0.0 ? fp.value / haar_value
                               : std::numeric_limits<double>::quiet_NaN();
    return r;
}

ExpressibilityReport expressibility_report(const FrameOperator &x,
                                           const EnsembleSampler &sampler,
                                           std::size_t n_pairs, std::uint64_t seed,
                                           FrameOptions options) {
    return make_expressibility_report(frame_potential(x, sampler, n_pairs, seed, options),
                                      haar_frame_potential(x));
}

DenseOperator dense_haar_twirl(const DenseOperator &x2, std::size_t cap) {
    const std::size_t dd = x2.dim();
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dd))));
    if (d * d != dd || d < 2) {
        throw ShapeError("twirl input must act on d^2 dimensions with d >= 2");
    }
    check_dense_cap(static_cast<std::size_t>(std::bit_width(d - 1)), cap);
    const DenseOperator w = swap_operator(d);
    const double df = static_cast<double>(d);
    const cplx tr = x2.trace();
    const cplx trw = (x2.matrix() * w.matrix()).trace();
    const cplx alpha = (tr - trw / df) / (df * df - 1.0);
    const cplx beta = (trw - tr / df) / (df * df - 1.0);
    const auto n = static_cast<Eigen::Index>(dd);
    return DenseOperator(alpha * ComplexMatrix::Identity(n, n) + beta * w.matrix());
}

double dense_epsilon_oracle(const FrameOperator &x, const EnsembleSampler &sampler,
                            std::size_t n_members, std::uint64_t seed, FrameOptions options,
                            std::size_t cap) {
    check_dense_cap(x.n_qubits(), cap);
    if (n_members < 1) {
        throw PreconditionError("oracle needs at least one member");
    }
    const ComplexMatrix xm = x.matrix(cap);
    const ComplexMatrix x2 = kron(xm, xm);
    const auto dd = x2.rows();
    ComplexMatrix avg = ComplexMatrix::Zero(dd, dd);
    for (std::size_t i = 0; i < n_members; ++i) {
        Rng rng = Rng::stream(seed, i);
        const ComplexMatrix u = sampler.draw(rng).matrix(cap);
        const ComplexMatrix m = options.orientation == Orientation::Forward
                                    ? ComplexMatrix(u * xm * u.adjoint())
                                    : ComplexMatrix(u.adjoint() * xm * u);
        avg += kron(m, m);
    }
    avg /= static_cast<double>(n_members);
    const ComplexMatrix a = dense_haar_twirl(DenseOperator(x2), cap).matrix() - avg;
    return a.norm();
}

} // namespace plateau
