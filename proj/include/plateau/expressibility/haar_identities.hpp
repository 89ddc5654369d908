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
#include <vector>

#include "plateau/core/dense.hpp"

namespace plateau {

enum class HaarIdentity : std::uint8_t {
    Single,    // E Tr[W A W^dag B]
    Chain,     // E Tr[W A W^dag B W C W^dag D]
    Product,   // E Tr[W A W^dag B] Tr[W C W^dag D]
    TwoCopy,   // E Tr[A U(x)U B U^dag(x)U^dag], A and B on d^2 dimensions
};

[[nodiscard]] std::string identity_name(HaarIdentity id);

/// Operators fed to the identities. A, B, C, D are d x d; the two-copy
/// identity uses `a2`, `b2` on d^2 dimensions.
struct IdentityOperands {
    ComplexMatrix a, b, c, d;
    ComplexMatrix a2, b2;
};

/// Random operands. Centered draws are complex Gaussian matrices; shifted
/// draws are I + 0.5 G with G Gaussian of entry variance 1/dim, which keeps
/// every closed form well away from zero.
enum class OperandKind : std::uint8_t { Centered, Shifted };

[[nodiscard]] IdentityOperands random_operands(std::size_t d, Rng &rng,
                                               OperandKind kind = OperandKind::Shifted);

[[nodiscard]] cplx identity_closed_form(HaarIdentity id, const IdentityOperands &ops);
/// Integrand for one unitary.
[[nodiscard]] cplx identity_integrand(HaarIdentity id, const IdentityOperands &ops,
                                      const ComplexMatrix &u);

struct IdentityCheck {
    HaarIdentity id;
    std::size_t tuple = 0;
    cplx analytic;
    cplx monte_carlo;
    /// sqrt(Var Re + Var Im) / sqrt(N).
    double std_error = 0.0;
    /// |MC - analytic| / |analytic|.
    double relative_error = 0.0;
    double sigma_tolerance = 5.0;
    double relative_tolerance = 0.01;

    [[nodiscard]] bool passed() const noexcept;
};

struct IdentityReport {
    std::size_t dim = 0;
    std::size_t n_samples = 0;
    std::vector<IdentityCheck> checks;

    [[nodiscard]] bool passed() const noexcept;
};

/// Checks every identity on `n_tuples` operand tuples; tuple t draws its
/// operands and its Haar samples from streams derived from (seed, t).
[[nodiscard]] IdentityReport verify_haar_identities(std::size_t d, std::size_t n_samples,
                                                    std::uint64_t seed,
                                                    std::size_t n_tuples = 1,
                                                    OperandKind kind = OperandKind::Shifted,
                                                    std::size_t threads = 0);

} // namespace plateau
