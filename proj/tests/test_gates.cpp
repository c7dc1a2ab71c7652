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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gateteach/gates.hpp"
#include "gateteach/pauli.hpp"

using namespace gateteach;

namespace {

Matrix gate(GateKind k, int n = 0) {
    return build_gate({k, n > 0 ? n : gate_arity(k).value_or(1)}).matrix();
}

/// Index of the single nonzero entry in column `in`, for permutation gates.
Eigen::Index image(const Matrix& m, Eigen::Index in) {
    Eigen::Index out = -1;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (std::abs(m(r, in)) > 0.5) {
            REQUIRE(out == -1);
            out = r;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("every named gate is unitary") {
    for (const auto& name : gate_names()) {
        const auto kind = parse_gate_name(name);
        REQUIRE(kind.has_value());
        for (int n : {1, 2, 3}) {
            if (gate_arity(*kind) && *gate_arity(*kind) != n) continue;
            CHECK(unitarity_deviation(gate(*kind, n)) < 1e-13);
        }
    }
}

TEST_CASE("names round-trip and parse case-insensitively") {
    for (const auto& name : gate_names()) CHECK(gate_name(*parse_gate_name(name)) == name);
    CHECK(parse_gate_name("cnot") == GateKind::CNOT);
    CHECK(parse_gate_name("Toffoli") == GateKind::TOFFOLI);
    CHECK_FALSE(parse_gate_name("nope").has_value());
}

TEST_CASE("single-qubit gates") {
    CHECK((gate(GateKind::X) - pauli_matrix(Pauli::X)).norm() == 0.0);
    CHECK((gate(GateKind::Y) - pauli_matrix(Pauli::Y)).norm() == 0.0);
    CHECK((gate(GateKind::Z) - pauli_matrix(Pauli::Z)).norm() == 0.0);
    const Matrix h = gate(GateKind::H);
    CHECK((h * h - Matrix::Identity(2, 2)).norm() < 1e-15);
    CHECK((h * pauli_matrix(Pauli::X) * h - pauli_matrix(Pauli::Z)).norm() < 1e-15);
    const Matrix s = gate(GateKind::S);
    const Matrix t = gate(GateKind::T);
    CHECK((s * s - gate(GateKind::Z)).norm() < 1e-15);
    CHECK((t * t - s).norm() < 1e-15);
    CHECK(std::abs(t(1, 1) - std::polar(1.0, std::numbers::pi / 4)) < 1e-15);
}

TEST_CASE("two-qubit gates") {
    SUBCASE("CNOT: control is qubit 0") {
        const Matrix m = gate(GateKind::CNOT);
        CHECK(image(m, 0b00) == 0b00);
        CHECK(image(m, 0b01) == 0b01);
        CHECK(image(m, 0b10) == 0b11);
        CHECK(image(m, 0b11) == 0b10);
    }
    SUBCASE("CZ is diag(1,1,1,-1)") {
        const Matrix m = gate(GateKind::CZ);
        CHECK(m.isDiagonal());
        CHECK(m(3, 3) == Complex(-1.0));
        CHECK(m(2, 2) == Complex(1.0));
    }
    SUBCASE("SWAP and iSWAP") {
        const Matrix sw = gate(GateKind::SWAP);
        CHECK(image(sw, 0b01) == 0b10);
        CHECK((sw * sw - Matrix::Identity(4, 4)).norm() == 0.0);
        const Matrix is = gate(GateKind::ISWAP);
        CHECK(is(2, 1) == Complex(0.0, 1.0));
        CHECK(is(1, 2) == Complex(0.0, 1.0));
        CHECK(is(0, 0) == Complex(1.0));
    }
    SUBCASE("CNOT conjugated by H on the target is CZ") {
        const Matrix ih = kron(Matrix::Identity(2, 2), gate(GateKind::H));
        CHECK((ih * gate(GateKind::CNOT) * ih - gate(GateKind::CZ)).norm() < 1e-14);
    }
}

TEST_CASE("three-qubit gates") {
    SUBCASE("Toffoli flips qubit 2 when qubits 0 and 1 are set") {
        const Matrix m = gate(GateKind::TOFFOLI);
        for (Eigen::Index b = 0; b < 8; ++b) CHECK(image(m, b) == ((b >> 1) == 0b11 ? b ^ 1 : b));
    }
    SUBCASE("Fredkin swaps qubits 1 and 2 when qubit 0 is set") {
        const Matrix m = gate(GateKind::FREDKIN);
        for (Eigen::Index b = 0; b < 8; ++b) {
            Eigen::Index expected = b;
            if (b & 0b100) expected = 0b100 | ((b & 1) << 1) | ((b >> 1) & 1);
            CHECK(image(m, b) == expected);
        }
    }
}

TEST_CASE("QFT") {
    CHECK((gate(GateKind::QFT, 1) - gate(GateKind::H)).norm() < 1e-15);
    for (int n = 1; n <= 4; ++n) {
        const Matrix f = gate(GateKind::QFT, n);
        const Eigen::Index d = f.rows();
        // |0> maps to the uniform superposition.
        CHECK((f.col(0) - Vector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)))).norm() < 1e-14);
        // F^2 is the index reversal j -> -j mod d.
        const Matrix f2 = f * f;
        for (Eigen::Index j = 0; j < d; ++j) CHECK(image(f2, j) == (d - j) % d);
    }
}

TEST_CASE("identity of any size and arity errors") {
    CHECK((gate(GateKind::I, 3) - Matrix::Identity(8, 8)).norm() == 0.0);
    CHECK_THROWS_AS(build_gate({GateKind::CNOT, 3}), InvariantError);
    CHECK_THROWS_AS(build_gate({GateKind::X, 2}), InvariantError);
    CHECK_THROWS_AS(build_gate({GateKind::QFT, 0}), InvariantError);
}
