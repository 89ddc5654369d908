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
#include <optional>

#include "plateau/ansatz/ansatz.hpp"
#include "plateau/expressibility/ensemble.hpp"
#include "plateau/expressibility/frame_potential.hpp"
#include "plateau/gradients/cost.hpp"
#include "plateau/gradients/statistics.hpp"

namespace plateau {

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Variance of dC when both sides of the cut are exact 2-designs.
[[nodiscard]] double two_design_variance_RL(std::size_t n, double tr_v, double tr_v2,
                                            double tr_h, double tr_h2, double tr_rho2);

enum class TwoDesignSide : std::uint8_t { R, L, RL };

struct TwoDesignVariance {
    TwoDesignSide which = TwoDesignSide::RL;
    double value = 0.0;
    double std_error = 0.0;
    /// Monte-Carlo estimate of the remaining one-sided integral (R and L only).
    std::optional<Estimate> inner_integral;
};

/// Variance when only the right segment is a 2-design. The integral of
/// Tr([V, U_L^dag H U_L]^2) runs over `left` with the fixed generator.
[[nodiscard]] TwoDesignVariance two_design_variance_R(const CostTerm &term,
                                                      const PauliTerm &generator,
                                                      const EnsembleSampler &left,
                                                      std::size_t n_samples, std::uint64_t seed,
                                                      std::size_t dense_cap = kDefaultDenseCap);

/// Same, with generator and left segment drawn jointly from the ansatz.
[[nodiscard]] TwoDesignVariance two_design_variance_R(const CostTerm &term,
                                                      const AnsatzSpec &ansatz, Slot target,
                                                      std::size_t n_samples, std::uint64_t seed,
                                                      std::size_t dense_cap = kDefaultDenseCap);

/// Variance when only the left segment is a 2-design. The integral of
/// Tr([V, U_R rho U_R^dag]^2) runs over `right`.
[[nodiscard]] TwoDesignVariance two_design_variance_L(const CostTerm &term,
                                                      const PauliTerm &generator,
                                                      const EnsembleSampler &right,
                                                      std::size_t n_samples, std::uint64_t seed);

[[nodiscard]] TwoDesignVariance two_design_variance_L(const CostTerm &term,
                                                      const AnsatzSpec &ansatz, Slot target,
                                                      std::size_t n_samples, std::uint64_t seed);

/// 4 eps_R eps_L + 2^(n+2) (x ||H||^2 + y ||rho||^2) / (2^(2n) - 1).
[[nodiscard]] double f_correction(double x, double y, std::size_t n, double h2norm_sq,
                                  double rho2norm_sq, double eps_R_rho, double eps_L_H);

struct BoundInputs {
    Estimate measured_variance;
    Estimate eps_R_rho;
    Estimate eps_L_H;
    Estimate var_R;
    Estimate var_L;
    double var_RL = 0.0;
    double h2norm_sq = 0.0;
    double rho2norm_sq = 1.0;
    std::size_t n_qubits = 1;
};

struct BoundCheck {
    double bound = 0.0;
    double bound_stderr = 0.0;
    double slack = 0.0;
    double slack_stderr = 0.0;

    /// slack >= -sigmas * slack_stderr.
    [[nodiscard]] bool holds(double sigmas = 3.0) const noexcept {
        return slack >= -sigmas * slack_stderr;
    }
};

struct BoundReport {
    Estimate measured_variance;
    Estimate eps_R_rho;
    Estimate eps_L_H;
    BoundCheck right;  // Var_R + 4 eps_R ||H||^2
    BoundCheck left;   // Var_L + 4 eps_L ||rho||^2
    BoundCheck both;   // Var_RL + f(eps_L, eps_R)
    // Filled by verify_theorem1 only.
    VarianceReport gradient;
    ExpressibilityReport expressibility_R;
    ExpressibilityReport expressibility_L;

    [[nodiscard]] bool holds(double sigmas = 3.0) const noexcept {
        return right.holds(sigmas) && left.holds(sigmas) && both.holds(sigmas);
    }
};

[[nodiscard]] BoundReport theorem1_bounds(const BoundInputs &in);

struct BoundRunOptions {
    std::size_t n_samples = 1000;
    std::size_t n_pairs = 5000;
    std::size_t n_inner = 2000;
    std::size_t dense_cap = kDefaultDenseCap;
    GradientOptions gradient;
    std::size_t threads = 0;
};

/// Full empirical check: measured variance, eps_R^rho over the right segment
/// (forward), eps_L^H over the left segment (Heisenberg), one-sided variances
/// over the actual segments and the closed-form two-sided variance.
[[nodiscard]] BoundReport verify_theorem1(const CostTerm &term, const AnsatzSpec &ansatz,
                                          Slot target, std::uint64_t seed,
                                          const BoundRunOptions &options = {});

} // namespace plateau
