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

#include "gateteach/pauli.hpp"

#include <bit>

namespace gateteach {

char pauli_label(Pauli p) {
    switch (p) {
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

std::optional<Pauli> parse_pauli(char c) {
    switch (c) {
        case 'X': case 'x': return Pauli::X;
        case 'Y': case 'y': return Pauli::Y;
        case 'Z': case 'z': return Pauli::Z;
        default: return std::nullopt;
    }
}

Matrix pauli_matrix(Pauli p) {
    const Complex i(0.0, 1.0);
    Matrix m = Matrix::Zero(2, 2);
    switch (p) {
        case Pauli::X: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case Pauli::Y: m(0, 1) = -i; m(1, 0) = i; break;
        case Pauli::Z: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    }
    return m;
}

PauliString::PauliString(int num_qubits, const std::vector<std::pair<int, Pauli>>& factors)
    : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 62) {
        throw InvariantError("PauliString: unsupported qubit count");
    }
    std::uint64_t seen = 0;
    for (const auto& [q, p] : factors) {
        if (q < 0 || q >= num_qubits) {
            throw InvariantError("PauliString: qubit " + std::to_string(q) + " out of range");
        }
        const std::uint64_t bit = std::uint64_t{1} << (num_qubits - 1 - q);
        if (seen & bit) {
            throw InvariantError("PauliString: qubit " + std::to_string(q) + " repeated");
        }
        seen |= bit;
        if (p != Pauli::Z) flip_ |= bit;
        if (p != Pauli::X) z_mask_ |= bit;
        if (p == Pauli::Y) ++y_count_;
    }
}

Complex PauliString::phase(std::uint64_t b) const {
    // Y = i X Z, so each Y contributes a factor i and every Z-type factor a sign (-1)^bit.
    static const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int sign_flips = std::popcount(b & z_mask_);
    const Complex base = kIPowers[y_count_ & 3];
    return (sign_flips & 1) ? -base : base;
}

Matrix PauliString::dense() const {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
    Matrix m = Matrix::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const auto ub = static_cast<std::uint64_t>(b);
        m(static_cast<Eigen::Index>(ub ^ flip_), b) = phase(ub);
    }
    return m;
}

int PauliSum::num_qubits() const {
    return terms.empty() ? 0 : terms.front().second.num_qubits();
}

Matrix PauliSum::dense() const {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits();
    Matrix m = Matrix::Zero(dim, dim);
    accumulate_into(m, 1.0);
    return m;
}

void PauliSum::accumulate_into(Matrix& out, double scale) const {
    for (const auto& [coeff, p] : terms) {
        const double c = coeff * scale;
        for (Eigen::Index b = 0; b < out.cols(); ++b) {
            const auto ub = static_cast<std::uint64_t>(b);
            out(static_cast<Eigen::Index>(ub ^ p.flip_mask()), b) += c * p.phase(ub);
        }
    }
}

Complex PauliSum::trace_product(const Matrix& m) const {
    Complex acc = 0.0;
    for (const auto& [coeff, p] : terms) {
        Complex term = 0.0;
        for (Eigen::Index b = 0; b < m.rows(); ++b) {
            const auto ub = static_cast<std::uint64_t>(b);
            // this(b^x, b) * m(b, b^x)
            term += p.phase(ub) * m(b, static_cast<Eigen::Index>(ub ^ p.flip_mask()));
        }
        acc += coeff * term;
    }
    return acc;
}

}  // namespace gateteach
