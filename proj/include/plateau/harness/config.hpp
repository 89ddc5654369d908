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
#include <string>
#include <string_view>
#include <vector>

#include "plateau/ansatz/ansatz.hpp"
#include "plateau/core/dense.hpp"
#include "plateau/gradients/cost.hpp"

namespace plateau {

enum class ExperimentKind : std::uint8_t {
    VarianceVsN,
    VarianceVsDepth,
    CorrelationSchemes,
    AxisRestriction,
    AngleRestriction,
    ExpressibilityCorrelation,
    BoundVerification,
    HaarIdentityCheck,
};

[[nodiscard]] std::string_view experiment_kind_name(ExperimentKind kind) noexcept;
[[nodiscard]] ExperimentKind parse_experiment_kind(std::string_view name);

/// True for the kinds whose rows are gradient statistics only.
[[nodiscard]] bool is_variance_kind(ExperimentKind kind) noexcept;

struct TargetChoice {
    enum class Layer : std::uint8_t { Index, First, Middle, Last };
    Layer layer_kind = Layer::First;
    std::size_t layer = 0;
    std::size_t qubit = 0;

    /// Middle is depth / 2 and Last is depth - 1.
    [[nodiscard]] Slot resolve(std::size_t depth) const noexcept;
    [[nodiscard]] std::string label() const;
};

struct CustomTerm {
    double coefficient = 1.0;
    /// Qubit-indexed factors such as "Z0 Z1", or "I".
    std::string pauli;
    /// Empty means the config-level initial state.
    std::string state;
};

struct CostChoice {
    enum class Kind : std::uint8_t { Global, Local, Custom };
    Kind kind = Kind::Global;
    std::size_t locality = 2;
    std::vector<CustomTerm> terms;

    [[nodiscard]] CostSpec build(std::size_t n_qubits, const InitialStateSpec &state) const;
    /// "global", "local-<k>" or "custom".
    [[nodiscard]] std::string label() const;
};

enum class BasePoint : std::uint8_t { Zero, Random };

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::VarianceVsN;

    // Grid axes, expanded in this order with the last varying fastest.
    std::vector<std::size_t> n_values{2};
    std::vector<std::size_t> depths{1};
    std::vector<CorrelationScheme> schemes{CorrelationScheme::Independent};
    std::vector<std::vector<Axis>> axes{{Axis::X, Axis::Y, Axis::Z}};
    std::vector<double> r_values{1.0};
    std::vector<TargetChoice> targets{TargetChoice{}};

    CostChoice cost;
    InitialStateSpec initial_state{InitialStateKind::TiltedProduct};
    std::size_t n_samples = 1000;
    std::size_t n_pairs = 5000;
    std::size_t n_inner = 2000;
    std::uint64_t seed = 0;
    std::size_t dense_cap = kDefaultDenseCap;
    std::string output;
    bool record_wall_time = false;
    BasePoint base_point = BasePoint::Zero;
    std::uint64_t base_seed = 0;
    bool resample_axes = true;
    std::uint64_t layout_seed = 0;
    GradientOptions gradient;
    /// Operand tuples per dimension for haar-identity-check, where d = 2^n.
    std::size_t identity_tuples = 5;
    std::size_t threads = 0;

    [[nodiscard]] std::size_t cell_count() const noexcept;
    /// Throws ValidationError naming the offending field.
    void validate() const;
    /// Stable text form of every field that affects results.
    [[nodiscard]] std::string canonical() const;
    /// FNV-1a of canonical(), as 16 hex digits.
    [[nodiscard]] std::string hash() const;
};

/// Throws ParseError with the field path on malformed input.
[[nodiscard]] ExperimentConfig parse_config(const std::string &text,
                                            const std::string &source = "<config>");
/// Throws IoError naming the file if it cannot be read.
[[nodiscard]] ExperimentConfig load_config(const std::string &path);

[[nodiscard]] std::string axes_label(const std::vector<Axis> &axes);
[[nodiscard]] std::vector<Axis> parse_axes(std::string_view text);

} // namespace plateau
