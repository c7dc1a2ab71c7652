// Copyright 2026 The gateteach Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gateteach/gates.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <utility>

namespace gateteach {

namespace {

constexpr std::array<std::pair<GateKind, const char*>, 14> kNames{{
    {GateKind::I, "I"},
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::T, "T"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CZ, "CZ"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::ISWAP, "ISWAP"},
    {GateKind::TOFFOLI, "TOFFOLI"},
    {GateKind::FREDKIN, "FREDKIN"},
    {GateKind::QFT, "QFT"},
}};

Matrix permutation(Eigen::Index dim, const std::vector<std::pair<Eigen::Index, Eigen::Index>>& swaps) {
    Matrix m = Matrix::Identity(dim, dim);
    for (const auto& [a, b] : swaps) {
        m.row(a).swap(m.row(b));
    }
    return m;
}

}  // namespace

std::string gate_name(GateKind kind) {
    for (const auto& [k, name] : kNames) {
        if (k == kind) return name;
    }
    return "?";
}

std::optional<GateKind> parse_gate_name(const std::string& name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (const auto& [k, n] : kNames) {
        if (upper == n) return k;
    }
    return std::nullopt;
}

std::vector<std::string> gate_names() {
    std::vector<std::string> out;
    for (const auto& [k, n] : kNames) out.emplace_back(n);
    return out;
}

std::optional<int> gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::I:
        case GateKind::QFT:
            return std::nullopt;
        case GateKind::X: case GateKind::Y: case GateKind::Z:
        case GateKind::H: case GateKind::S: case GateKind::T:
            return 1;
        case GateKind::CNOT: case GateKind::CZ: case GateKind::SWAP: case GateKind::ISWAP:
            return 2;
        case GateKind::TOFFOLI: case GateKind::FREDKIN:
            return 3;
    }
    return std::nullopt;
}

UnitaryMatrix build_gate(const NamedGate& gate) {
    const int n = gate.num_qubits;
    if (const auto arity = gate_arity(gate.kind); arity && *arity != n) {
        throw InvariantError(gate_name(gate.kind) + " acts on " + std::to_string(*arity) +
                             " qubits, not " + std::to_string(n));
    }
    if (n < 1 || n > 10) {
        throw InvariantError(gate_name(gate.kind) + ": unsupported qubit count " + std::to_string(n));
    }
    const Complex i(0.0, 1.0);
    const double r2 = 1.0 / std::sqrt(2.0);
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix m = Matrix::Identity(dim, dim);
    switch (gate.kind) {
        case GateKind::I:
            break;
        case GateKind::X:
            m << 0, 1, 1, 0;
            break;
        case GateKind::Y:
            m << 0, -i, i, 0;
            break;
        case GateKind::Z:
            m(1, 1) = -1.0;
            break;
        case GateKind::H:
            m << r2, r2, r2, -r2;
            break;
        case GateKind::S:
            m(1, 1) = i;
            break;
        case GateKind::T:
            m(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
            break;
        case GateKind::CNOT:
            m = permutation(4, {{2, 3}});
            break;
        case GateKind::CZ:
            m(3, 3) = -1.0;
            break;
        case GateKind::SWAP:
            m = permutation(4, {{1, 2}});
            break;
        case GateKind::ISWAP:
            m(1, 1) = 0.0;
            m(2, 2) = 0.0;
            m(1, 2) = i;
            m(2, 1) = i;
            break;
        case GateKind::TOFFOLI:
            m = permutation(8, {{6, 7}});
            break;
        case GateKind::FREDKIN:
            m = permutation(8, {{5, 6}});
            break;
        case GateKind::QFT: {
            const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
            for (Eigen::Index j = 0; j < dim; ++j) {
                for (Eigen::Index k = 0; k < dim; ++k) {
                    // Reduce jk mod dim first so the angle stays exact for large n.
                    const auto e = static_cast<double>((j * k) % dim);
                    m(j, k) = std::polar(scale, 2.0 * std::numbers::pi * e / static_cast<double>(dim));
                }
            }
            break;
        }
    }
    return UnitaryMatrix(std::move(m));
}

}  // namespace gateteach
