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

#include "plateau/bounds/bounds.hpp"

#include <cmath>
#include <functional>

#include "plateau/core/dense.hpp"
#include "plateau/errors.hpp"
#include "plateau/expressibility/frame_potential.hpp"
#include "plateau/parallel.hpp"

namespace plateau {

namespace {

double dim_of(std::size_t n) { return std::ldexp(1.0, static_cast<int>(n)); }

// Tr([V, U^dag H U]^2) for one left segment.
double commutator_square_heisenberg(const ComplexMatrix &h, const ComplexMatrix &v,
                                    const ComplexMatrix &u) {
    const ComplexMatrix ht = u.adjoint() * h * u;
    const ComplexMatrix c = v * ht - ht * v;
    return (c * c).trace().real();
}

// Tr([V, |phi><phi|]^2) = 2 (|<phi|V|phi>|^2 - 1) for a unit vector phi.
double commutator_square_state(const StateVector &phi, const PauliTerm &generator) {
    StateVector vphi = phi;
    vphi.apply_pauli(generator);
    return 2.0 * (std::norm(phi.inner(vphi)) - 1.0);
}

Estimate mean_of(std::vector<double> &samples) {
    const VarianceReport r = summarize(samples);
    return {r.mean, r.mean_stderr};
}

TwoDesignVariance finish_R(const CostTerm &term, const Estimate &inner) {
    const std::size_t n = term.observable.n_qubits();
    const double d = dim_of(n);
    const double pre = -(1.0 - 1.0 / d) / (d * d - 1.0);
    TwoDesignVariance out;
    out.which = TwoDesignSide::R;
    out.value = pre * inner.value;
    out.std_error = std::abs(pre) * inner.std_error;
    out.inner_integral = inner;
    return out;
}

TwoDesignVariance finish_L(const CostTerm &term, const Estimate &inner) {
    const std::size_t n = term.observable.n_qubits();
    const double d = dim_of(n);
    const double tr_h = term.observable.trace();
    const double pre =
        -(term.observable.hs_norm_squared() - tr_h * tr_h / d) / (d * d - 1.0);
    TwoDesignVariance out;
    out.which = TwoDesignSide::L;
    out.value = pre * inner.value;
    out.std_error = std::abs(pre) * inner.std_error;
    out.inner_integral = inner;
    return out;
}

void check_samples(std::size_t n_samples) {
    if (n_samples < 2) {
        throw PreconditionError("one-sided variance needs at least 2 samples");
    }
}

ComplexMatrix generator_matrix(std::size_t n, const PauliTerm &generator, std::size_t cap) {
    return observable_to_dense(Observable(n, {generator}), cap).matrix();
}

} // namespace

double two_design_variance_RL(std::size_t n, double tr_v, double tr_v2, double tr_h,
                              double tr_h2, double tr_rho2) {
    if (!(tr_v2 > 0.0)) {
        throw DomainError("Tr V^2 must be positive");
    }
    if (!(tr_rho2 > 0.0 && tr_rho2 <= 1.0 + 1e-12)) {
        throw DomainError("Tr rho^2 must lie in (0, 1]");
    }
    const double d = dim_of(n);
    const double k = d * d - 1.0;
    const double g = -2.0 * (tr_rho2 - 1.0 / d) *
                     ((tr_v * tr_v * tr_h2 + tr_v2 * tr_h * tr_h) / k -
                      (tr_v2 * tr_h2 + tr_v * tr_v * tr_h * tr_h) / (d * k) - tr_v2 * tr_h2 / d);
    return g / k;
}

TwoDesignVariance two_design_variance_R(const CostTerm &term, const PauliTerm &generator,
                                        const EnsembleSampler &left, std::size_t n_samples,
                                        std::uint64_t seed, std::size_t cap) {
    check_samples(n_samples);
    const std::size_t n = term.observable.n_qubits();
    const ComplexMatrix h = observable_to_dense(term.observable, cap).matrix();
    const ComplexMatrix v = generator_matrix(n, generator, cap);
    std::vector<double> samples(n_samples);
    parallel_for(n_samples, resolve_threads(0), [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        samples[i] = commutator_square_heisenberg(h, v, left.draw(rng).matrix(cap));
    });
    return finish_R(term, mean_of(samples));
}

TwoDesignVariance two_design_variance_R(const CostTerm &term, const AnsatzSpec &ansatz,
                                        Slot target, std::size_t n_samples, std::uint64_t seed,
                                        std::size_t cap) {
    check_samples(n_samples);
    ansatz.check_slot(target);
    const std::size_t n = ansatz.n_qubits;
    const ComplexMatrix h = observable_to_dense(term.observable, cap).matrix();
    std::vector<double> samples(n_samples);
    parallel_for(n_samples, resolve_threads(0), [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        const CircuitCut cut = split_at(ansatz, sample_assignment(ansatz, rng), target);
        samples[i] = commutator_square_heisenberg(h, generator_matrix(n, cut.generator, cap),
                                                  circuit_matrix(cut.left, n, cap));
    });
    return finish_R(term, mean_of(samples));
}

TwoDesignVariance two_design_variance_L(const CostTerm &term, const PauliTerm &generator,
                                        const EnsembleSampler &right, std::size_t n_samples,
                                        std::uint64_t seed) {
    check_samples(n_samples);
    const std::size_t n = term.observable.n_qubits();
    std::vector<double> samples(n_samples);
    parallel_for(n_samples, resolve_threads(0), [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        StateVector phi = term.state.prepare(n);
        right.draw(rng).apply(phi);
        samples[i] = commutator_square_state(phi, generator);
    });
    return finish_L(term, mean_of(samples));
}

TwoDesignVariance two_design_variance_L(const CostTerm &term, const AnsatzSpec &ansatz,
                                        Slot target, std::size_t n_samples,
                                        std::uint64_t seed) {
    check_samples(n_samples);
    ansatz.check_slot(target);
    const std::size_t n = ansatz.n_qubits;
    std::vector<double> samples(n_samples);
    parallel_for(n_samples, resolve_threads(0), [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        const CircuitCut cut = split_at(ansatz, sample_assignment(ansatz, rng), target);
        StateVector phi = term.state.prepare(n);
        phi.apply(cut.right);
        samples[i] = commutator_square_state(phi, cut.generator);
    });
    return finish_L(term, mean_of(samples));
}

double f_correction(double x, double y, std::size_t n, double h2norm_sq, double rho2norm_sq,
                    double eps_R_rho, double eps_L_H) {
    for (double v : {x, y, h2norm_sq, rho2norm_sq, eps_R_rho, eps_L_H}) {
        if (!(v >= 0.0)) {
            throw DomainError("f(x, y) inputs must be non-negative");
        }
    }
    const double d = dim_of(n);
    return 4.0 * eps_R_rho * eps_L_H +
           4.0 * d * (x * h2norm_sq + y * rho2norm_sq) / (d * d - 1.0);
}

BoundReport theorem1_bounds(const BoundInputs &in) {
    for (double v : {in.eps_R_rho.value, in.eps_L_H.value}) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw DomainError("expressibility inputs must be finite and non-negative");
        }
    }
    const double d = dim_of(in.n_qubits);
    const double er = in.eps_R_rho.value, el = in.eps_L_H.value;
    const double ser = in.eps_R_rho.std_error, sel = in.eps_L_H.std_error;
    const double meas = in.measured_variance.value, smeas = in.measured_variance.std_error;

    const auto check = [&](double bound, double bound_se) {
        BoundCheck c;
        c.bound = bound;
        c.bound_stderr = bound_se;
        c.slack = bound - meas;
        c.slack_stderr = std::hypot(bound_se, smeas);
        return c;
    };

    BoundReport r;
    r.measured_variance = in.measured_variance;
    r.eps_R_rho = in.eps_R_rho;
    r.eps_L_H = in.eps_L_H;
    r.right = check(in.var_R.value + 4.0 * er * in.h2norm_sq,
                    std::hypot(in.var_R.std_error, 4.0 * in.h2norm_sq * ser));
    r.left = check(in.var_L.value + 4.0 * el * in.rho2norm_sq,
                   std::hypot(in.var_L.std_error, 4.0 * in.rho2norm_sq * sel));
    const double f = f_correction(el, er, in.n_qubits, in.h2norm_sq, in.rho2norm_sq, er, el);
    const double dfl = 4.0 * er + 4.0 * d * in.h2norm_sq / (d * d - 1.0);
    const double dfr = 4.0 * el + 4.0 * d * in.rho2norm_sq / (d * d - 1.0);
    r.both = check(in.var_RL + f, std::hypot(dfl * sel, dfr * ser));
    return r;
}

BoundReport verify_theorem1(const CostTerm &term, const AnsatzSpec &ansatz, Slot target,
                            std::uint64_t seed, const BoundRunOptions &opt) {
    ansatz.validate();
    ansatz.check_slot(target);
    const std::size_t n = ansatz.n_qubits;
    const CostSpec cost_spec{{term}};
    cost_spec.validate(n);

    BoundInputs in;
    in.n_qubits = n;
    in.h2norm_sq = term.observable.hs_norm_squared();
    in.rho2norm_sq = 1.0;

    const VarianceReport vr = estimate_gradient_statistics(
        cost_spec, ansatz, target, opt.n_samples, derive_seed(seed, 0), opt.gradient,
        opt.threads);
    in.measured_variance = {vr.variance, vr.variance_stderr};

    FrameOptions fwd;
    fwd.dense_cap = opt.dense_cap;
    fwd.threads = opt.threads;
    const auto rho = FrameOperator::state(term.state.prepare(n));
    const auto eps_r = expressibility_report(
        rho, EnsembleSampler::ansatz(ansatz, Segment::Right, target), opt.n_pairs,
        derive_seed(seed, 1), fwd);
    in.eps_R_rho = {eps_r.epsilon, eps_r.epsilon_stderr};

    FrameOptions heis = fwd;
    heis.orientation = Orientation::Heisenberg;
    const auto eps_l = expressibility_report(
        FrameOperator::observable(term.observable),
        EnsembleSampler::ansatz(ansatz, Segment::Left, target), opt.n_pairs,
        derive_seed(seed, 2), heis);
    in.eps_L_H = {eps_l.epsilon, eps_l.epsilon_stderr};

    const auto vR = two_design_variance_R(term, ansatz, target, opt.n_inner, derive_seed(seed, 3),
                                          opt.dense_cap);
    const auto vL = two_design_variance_L(term, ansatz, target, opt.n_inner, derive_seed(seed, 4));
    in.var_R = {vR.value, vR.std_error};
    in.var_L = {vL.value, vL.std_error};

    // Every generator is a single-qubit Pauli: Tr V = 0, Tr V^2 = d.
    const double d = dim_of(n);
    in.var_RL = two_design_variance_RL(n, 0.0, d, term.observable.trace(), in.h2norm_sq, 1.0);
    BoundReport report = theorem1_bounds(in);
    report.gradient = vr;
    report.expressibility_R = eps_r;
    report.expressibility_L = eps_l;
    return report;
}

} // namespace plateau
