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

#include "plateau/core/gates.hpp"

#include "plateau/errors.hpp"

namespace plateau {

char axis_char(Axis axis) noexcept {
    switch (axis) {
    case Axis::X:
        return 'x';
    case Axis::Y:
        return 'y';
    case Axis::Z:
        return 'z';
    }
    return '?';
}

Axis parse_axis(char c) {
    switch (c) {
    case 'x':
    case 'X':
        return Axis::X;
    case 'y':
    case 'Y':
        return Axis::Y;
    case 'z':
    case 'Z':
        return Axis::Z;
    default:
        throw ParseError("", std::string("unknown rotation axis '") + c + "'");
    }
}

} // namespace plateau
