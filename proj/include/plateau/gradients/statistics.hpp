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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "plateau/ansatz/ansatz.hpp"
#include "plateau/gradients/cost.hpp"

namespace plateau {

struct VarianceReport {
    std::size_t n_samples = 0;
    double mean = 0.0;
    double mean_stderr = 0.0;
    double variance = 0.0;
    /// Delete-1 jackknife; infinite for n_samples = 2.
    double variance_stderr = 0.0;
    double sum = 0.0;
    double sum_sq = 0.0;
};

/// Mean and unbiased variance from pairwise-summed accumulators.
/// Precondition: at least 2 samples.
[[nodiscard]] VarianceReport summarize(std::span<const double> samples);

/// Stream used for ensemble member `index`. Everything a member needs is
/// drawn from this one stream, so results do not depend on scheduling.
[[nodiscard]] inline Rng sample_stream(std::uint64_t seed, std::uint64_t index) {
    return Rng::stream(seed, index);
}

/// iid draws of the target derivative over the ansatz distribution.
[[nodiscard]] std::vector<double>
sample_gradients(const CostSpec &cost_spec, const AnsatzSpec &ansatz, Slot target,
                 std::size_t n_samples, std::uint64_t seed,
                 GradientOptions options = {}, std::size_t threads = 0);

[[nodiscard]] VarianceReport
estimate_gradient_statistics(const CostSpec &cost_spec, const AnsatzSpec &ansatz,
                             Slot target, std::size_t n_samples, std::uint64_t seed,
                             GradientOptions options = {}, std::size_t threads = 0);

/// Upper bound Var / delta^2 on P(|dC| >= delta).
[[nodiscard]] double chebyshev_tail(double variance, double delta);

/// Fraction of samples with |x - mean| >= delta.
[[nodiscard]] double tail_frequency(std::span<const double> samples, double mean,
                                    double delta);

} // namespace plateau
