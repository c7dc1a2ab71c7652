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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gateteach/linalg.hpp"

namespace gateteach {

enum class Pauli : std::uint8_t { X, Y, Z };

char pauli_label(Pauli p);
std::optional<Pauli> parse_pauli(char c);

/// 2x2 matrix of a single Pauli (identity is not a Pauli here).
Matrix pauli_matrix(Pauli p);

/// Tensor product of single-qubit Paulis on an n-qubit register, stored as
/// bit masks. Every row has exactly one nonzero entry:
///   P |b> = phase(b) |b xor flip_mask>.
class PauliString {
public:
    PauliString(int num_qubits, const std::vector<std::pair<int, Pauli>>& factors);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t flip_mask() const { return flip_; }

    /// Coefficient of |b xor flip_mask> in P|b>.
    Complex phase(std::uint64_t b) const;

    Matrix dense() const;

private:
    int num_qubits_;
    std::uint64_t flip_ = 0;
    std::uint64_t z_mask_ = 0;  // qubits carrying Z or Y
    int y_count_ = 0;
};

/// Real linear combination of Pauli strings; always Hermitian.
struct PauliSum {
    std::vector<std::pair<double, PauliString>> terms;

    int num_qubits() const;
    Matrix dense() const;

    /// out += scale * this.
    void accumulate_into(Matrix& out, double scale) const;

    /// sum_ij this_ij * m_ji, i.e. tr(this * m).
    Complex trace_product(const Matrix& m) const;
};

}  // namespace gateteach
