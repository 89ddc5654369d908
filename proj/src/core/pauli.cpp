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

#include "plateau/core/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <string>
#include <utility>

#include "plateau/errors.hpp"

namespace plateau {

void PauliTerm::validate(std::size_t n_qubits) const {
    std::uint64_t seen = 0;
    for (const auto &f : factors) {
        if (f.qubit >= n_qubits) {
            throw IndexError("Pauli factor on qubit " + std::to_string(f.qubit) +
                             " outside [0, " + std::to_string(n_qubits) + ")");
        }
        const std::uint64_t bit = std::uint64_t{1} << f.qubit;
        if ((seen & bit) != 0) {
            throw IndexError("Pauli term repeats qubit " +
                             std::to_string(f.qubit));
        }
        seen |= bit;
    }
}

PauliTerm parse_pauli_string(std::string_view text, double coefficient) {
    PauliTerm term{coefficient, {}};
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    skip_space();
    if (i < text.size() && (text[i] == 'I' || text[i] == 'i') &&
        (i + 1 == text.size() ||
         std::isspace(static_cast<unsigned char>(text[i + 1])))) {
        ++i;
        skip_space();
        if (i != text.size()) {
            throw ParseError("", "identity term must stand alone");
        }
        return term;
    }
    while (i < text.size()) {
        const Axis axis = parse_axis(text[i++]);
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (start == i) {
            throw ParseError("", "Pauli factor without qubit index in '" +
                                     std::string(text) + "'");
        }
        term.factors.push_back(
            {static_cast<std::size_t>(std::stoul(std::string(text.substr(start, i - start)))),
             axis});
        skip_space();
    }
    if (term.factors.empty()) {
        throw ParseError("", "empty Pauli string");
    }
    return term;
}

namespace {

struct Masks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    auto operator<=>(const Masks &) const = default;
};

Masks masks_of(const PauliTerm &term, std::size_t n_qubits) {
    Masks m;
    for (const auto &f : term.factors) {
        const std::uint64_t bit = std::uint64_t{1} << (n_qubits - 1 - f.qubit);
        if (f.axis != Axis::Z) {
            m.x |= bit;
        }
        if (f.axis != Axis::X) {
            m.z |= bit;
        }
    }
    return m;
}

} // namespace

Observable::Observable(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > 30) {
        throw PreconditionError("observable qubit count must be in [1, 30]");
    }
    if (terms.empty()) {
        throw PreconditionError("observable needs at least one term");
    }
    std::map<Masks, PauliTerm> merged;
    for (auto &t : terms) {
        t.validate(n_qubits);
        std::sort(t.factors.begin(), t.factors.end(),
                  [](const PauliFactor &a, const PauliFactor &b) {
                      return a.qubit < b.qubit;
                  });
        const Masks key = masks_of(t, n_qubits);
        auto [it, inserted] = merged.try_emplace(key, t);
        if (!inserted) {
            it->second.coefficient += t.coefficient;
        }
    }
    for (auto &[key, t] : merged) {
        masked_.push_back({t.coefficient, key.x, key.z,
                           static_cast<unsigned>(std::popcount(key.x & key.z))});
        terms_.push_back(std::move(t));
    }
}

double Observable::trace() const noexcept {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].factors.empty()) {
            return static_cast<double>(dim()) * terms_[i].coefficient;
        }
    }
    return 0.0;
}

double Observable::hs_norm_squared() const noexcept {
    double s = 0.0;
    for (const auto &t : terms_) {
        s += t.coefficient * t.coefficient;
    }
    return s * static_cast<double>(dim());
}

void Observable::apply(std::span<const cplx> in, std::span<cplx> out) const {
    if (in.size() != dim() || out.size() != dim()) {
        throw ShapeError("buffer length does not match observable dimension");
    }
    static constexpr cplx kIPow[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    std::fill(out.begin(), out.end(), cplx{0.0, 0.0});
    for (const auto &t : masked_) {
        const cplx w = t.coefficient * kIPow[t.y_count % 4];
        for (std::size_t x = 0; x < in.size(); ++x) {
            const cplx v = w * in[x];
            out[x ^ t.flip_mask] +=
                (std::popcount(x & t.phase_mask) & 1) != 0 ? -v : v;
        }
    }
}

Observable Observable::global_z(std::size_t n_qubits) {
    PauliTerm t;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        t.factors.push_back({q, Axis::Z});
    }
    return Observable(n_qubits, {t});
}

Observable Observable::local_z(std::size_t n_qubits, std::size_t k) {
    if (k == 0 || k > n_qubits) {
        throw PreconditionError("local cost width must be in [1, n]");
    }
    PauliTerm t;
    for (std::size_t q = 0; q < k; ++q) {
        t.factors.push_back({q, Axis::Z});
    }
    return Observable(n_qubits, {t});
}

Observable Observable::single(std::size_t n_qubits, std::size_t qubit,
                              Axis axis) {
    return Observable(n_qubits, {PauliTerm{1.0, {{qubit, axis}}}});
}

void apply_pauli_term(std::span<cplx> amps, std::size_t n_qubits,
                      const PauliTerm &term) {
    const Masks m = masks_of(term, n_qubits);
    const unsigned ny = static_cast<unsigned>(std::popcount(m.x & m.z));
    static constexpr cplx kIPow[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    const cplx w = term.coefficient * kIPow[ny % 4];
    auto phase = [&](std::size_t x) {
        return (std::popcount(x & m.z) & 1) != 0 ? -w : w;
    };
    if (m.x == 0) {
        for (std::size_t x = 0; x < amps.size(); ++x) {
            amps[x] *= phase(x);
        }
        return;
    }
    // Swap-and-phase over index pairs (x, x ^ flip), visiting each pair once.
    for (std::size_t x = 0; x < amps.size(); ++x) {
        const std::size_t y = x ^ m.x;
        if (x < y) {
            const cplx ax = amps[x];
            const cplx ay = amps[y];
            amps[y] = phase(x) * ax;
            amps[x] = phase(y) * ay;
        }
    }
}

} // namespace plateau
