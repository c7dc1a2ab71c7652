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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gateteach/linalg.hpp"

namespace gateteach {

/// Named target gates, as textbook matrices (no global-phase normalization).
///
/// Conventions, with qubit 0 the most significant bit:
///   CNOT     control 0, target 1
///   CZ       phase -1 on |11>
///   ISWAP    |01> -> i|10>, |10> -> i|01>
///   TOFFOLI  controls 0 and 1, target 2 (|110> <-> |111>)
///   FREDKIN  control 0, swaps qubits 1 and 2 (|101> <-> |110>)
///   QFT(n)   entries 2^{-n/2} w^{jk}, w = e^{2 pi i / 2^n}
///   I(n)     identity on n qubits
enum class GateKind { I, X, Y, Z, H, S, T, CNOT, CZ, SWAP, ISWAP, TOFFOLI, FREDKIN, QFT };

struct NamedGate {
    GateKind kind = GateKind::I;
    int num_qubits = 1;
};

std::string gate_name(GateKind kind);
std::optional<GateKind> parse_gate_name(const std::string& name);

/// Fixed arity of a gate, or nullopt for I and QFT (any n >= 1).
std::optional<int> gate_arity(GateKind kind);

/// Throws InvariantError on an arity mismatch.
UnitaryMatrix build_gate(const NamedGate& gate);

/// Names accepted by parse_gate_name.
std::vector<std::string> gate_names();

}  // namespace gateteach
