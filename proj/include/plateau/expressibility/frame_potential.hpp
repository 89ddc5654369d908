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
#include <variant>

#include "plateau/core/dense.hpp"
#include "plateau/core/pauli.hpp"
#include "plateau/core/state_vector.hpp"
#include "plateau/expressibility/ensemble.hpp"

namespace plateau {

/// Operator X whose second moment is probed. Pure states are kept as state
/// vectors so the pair contraction costs O(2^n); observables and general
/// Hermitian operators go through the dense path.
class FrameOperator {
  public:
    static FrameOperator state(StateVector psi);
    static FrameOperator observable(Observable h);
    /// Throws DomainError unless `x` is Hermitian.
    static FrameOperator dense(DenseOperator x);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return std::size_t{1} << n_qubits_; }
    [[nodiscard]] bool is_state() const noexcept {
        return std::holds_alternative<StateVector>(repr_);
    }
    [[nodiscard]] const StateVector &as_state() const { return std::get<StateVector>(repr_); }
    [[nodiscard]] double trace() const;
    [[nodiscard]] double trace_squared() const;
    [[nodiscard]] ComplexMatrix matrix(std::size_t cap = kDefaultDenseCap) const;

  private:
    FrameOperator(std::size_t n, std::variant<StateVector, Observable, DenseOperator> r)
        : n_qubits_(n), repr_(std::move(r)) {}

    std::size_t n_qubits_;
    std::variant<StateVector, Observable, DenseOperator> repr_;
};

/// Forward evolves X to U X U^dag, Heisenberg to U^dag X U.
enum class Orientation : std::uint8_t { Forward, Heisenberg };

struct FrameOptions {
    Orientation orientation = Orientation::Forward;
    std::size_t dense_cap = kDefaultDenseCap;
    std::size_t threads = 0;
};

struct FramePotentialEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t n_pairs = 0;
};

/// E_{U,V} Tr[(U X U^dag)(V X V^dag)]^2 over independent pairs. Pair i
/// draws U then V from stream(seed, i).
[[nodiscard]] FramePotentialEstimate frame_potential(const FrameOperator &x,
                                                     const EnsembleSampler &sampler,
                                                     std::size_t n_pairs, std::uint64_t seed,
                                                     FrameOptions options = {});

/// Frame potential of the empirical ensemble of `n_members` draws, averaged
/// over all ordered pairs including i = j; stderr is a delete-1 jackknife
/// over members. Member i is drawn from stream(seed, i).
[[nodiscard]] FramePotentialEstimate
frame_potential_stored(const FrameOperator &x, const EnsembleSampler &sampler,
                       std::size_t n_members, std::uint64_t seed, FrameOptions options = {});

/// Haar value from Tr X and Tr X^2 on `dim` dimensions.
[[nodiscard]] double haar_frame_potential(double tr_x, double tr_x2, std::size_t dim);
/// Haar value for X; for a pure state this also checks the closed form of
/// fiducial_haar_frame_potential.
[[nodiscard]] double haar_frame_potential(const FrameOperator &x);
/// 1 / ((2^n + 1) 2^(n-1)).
[[nodiscard]] double fiducial_haar_frame_potential(std::size_t n_qubits);

struct ExpressibilityReport {
    FramePotentialEstimate frame_potential;
    double haar_value = 0.0;
    /// F - F_Haar before clamping.
    double difference = 0.0;
    double epsilon = 0.0;
    double epsilon_stderr = 0.0;
    double ratio = 0.0;
    bool clamped = false;
};

[[nodiscard]] ExpressibilityReport make_expressibility_report(FramePotentialEstimate fp,
                                                              double haar_value);

[[nodiscard]] ExpressibilityReport expressibility_report(const FrameOperator &x,
                                                         const EnsembleSampler &sampler,
                                                         std::size_t n_pairs,
                                                         std::uint64_t seed,
                                                         FrameOptions options = {});

/// Haar average of U^(x)2 X2 U^dag(x)2 for X2 on d^2 dimensions: alpha I + beta W.
[[nodiscard]] DenseOperator dense_haar_twirl(const DenseOperator &x2,
                                             std::size_t cap = kDefaultDenseCap);

inline constexpr std::size_t kEpsilonOracleCap = 3;

/// ||A(X (x) X)||_2 built from dense d^2 x d^2 matrices over the empirical
/// ensemble of `n_members` draws (same draws as frame_potential_stored).
[[nodiscard]] double dense_epsilon_oracle(const FrameOperator &x,
                                          const EnsembleSampler &sampler,
                                          std::size_t n_members, std::uint64_t seed,
                                          FrameOptions options = {},
                                          std::size_t cap = kEpsilonOracleCap);

} // namespace plateau
