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
#include <variant>
#include <vector>

namespace plateau {

enum class Axis : std::uint8_t { X, Y, Z };

[[nodiscard]] char axis_char(Axis axis) noexcept;

/// Parses 'x', 'y', 'z' (either case). Throws ParseError otherwise.
[[nodiscard]] Axis parse_axis(char c);

/// exp(-i * angle * sigma_axis) on one qubit. Full-angle convention: the
/// generator squares to the identity and the cost has period pi in `angle`.
struct Rotation {
    std::size_t qubit = 0;
    Axis axis = Axis::Z;
    double angle = 0.0;

    friend bool operator==(const Rotation &, const Rotation &) = default;
};

/// diag(1, 1, 1, -1) on a qubit pair. Symmetric in its two qubits.
struct CPhase {
    std::size_t control = 0;
    std::size_t target = 1;

    friend bool operator==(const CPhase &, const CPhase &) = default;
};

using Gate = std::variant<Rotation, CPhase>;
using GateSequence = std::vector<Gate>;

/// Gates in application order on `n_qubits` qubits.
struct Circuit {
    std::size_t n_qubits = 0;
    GateSequence gates;
};

} // namespace plateau
