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

#include "plateau/gradients/statistics.hpp"

#include <cmath>
#include <limits>

#include "plateau/errors.hpp"
#include "plateau/parallel.hpp"

namespace plateau {

VarianceReport summarize(std::span<const double> samples) {
    const std::size_t n = samples.size();
    if (n < 2) {
        throw PreconditionError("variance needs at least 2 samples");
    }
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        sq[i] = samples[i] * samples[i];
    }
    VarianceReport r;
    r.n_samples = n;
    r.sum = pairwise_sum(samples);
    r.sum_sq = pairwise_sum(sq);
    const double nd = static_cast<double>(n);
    r.mean = r.sum / nd;
    r.variance = std::max(0.0, (r.sum_sq - r.sum * r.sum / nd) / (nd - 1.0));
    r.mean_stderr = std::sqrt(r.variance / nd);

    if (n == 2) {
        r.variance_stderr = std::numeric_limits<double>::infinity();
        return r;
    }
    std::vector<double> loo(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s1 = r.sum - samples[i];
        const double s2 = r.sum_sq - sq[i];
        loo[i] = (s2 - s1 * s1 / (nd - 1.0)) / (nd - 2.0);
    }
    const double loo_mean = pairwise_sum(loo) / nd;
    for (auto &v : loo) {
        v = (v - loo_mean) * (v - loo_mean);
    }
    r.variance_stderr = std::sqrt((nd - 1.0) / nd * pairwise_sum(loo));
    return r;
}

std::vector<double> sample_gradients(const CostSpec &cost_spec, const AnsatzSpec &ansatz,
                                     Slot target, std::size_t n_samples,
                                     std::uint64_t seed, GradientOptions options,
                                     std::size_t threads) {
    ansatz.validate();
    ansatz.check_slot(target);
    cost_spec.validate(ansatz.n_qubits);
    std::vector<double> out(n_samples);
    parallel_for(n_samples, resolve_threads(threads), [&](std::size_t i) {
        Rng rng = sample_stream(seed, i);
        const ParameterAssignment a = sample_assignment(ansatz, rng);
        out[i] = partial_derivative(cost_spec, ansatz, a, target, options);
    });
    return out;
}

VarianceReport estimate_gradient_statistics(const CostSpec &cost_spec,
                                            const AnsatzSpec &ansatz, Slot target,
                                            std::size_t n_samples, std::uint64_t seed,
                                            GradientOptions options,
                                            std::size_t threads) {
    if (n_samples < 2) {
        throw PreconditionError("n_samples must be at least 2");
    }
    const auto samples =
        sample_gradients(cost_spec, ansatz, target, n_samples, seed, options, threads);
    return summarize(samples);
}

double chebyshev_tail(double variance, double delta) {
    if (!(delta > 0.0)) {
        throw DomainError("Chebyshev delta must be positive");
    }
    if (!(variance >= 0.0)) {
        throw DomainError("variance must be non-negative");
    }
    return variance / (delta * delta);
}

double tail_frequency(std::span<const double> samples, double mean, double delta) {
    if (samples.empty()) {
        throw PreconditionError("tail frequency of an empty sample");
    }
    std::size_t hits = 0;
    for (double x : samples) {
        if (std::abs(x - mean) >= delta) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(samples.size());
}

} // namespace plateau
