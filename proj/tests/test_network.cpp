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

#include <algorithm>

#include "gateteach/network.hpp"
#include "oracles.hpp"

using namespace gateteach;

namespace {

NetworkSpec chain(int n, CouplingKind kind, std::vector<Pauli> field_axes = {}) {
    NetworkSpec s;
    s.num_qubits = n;
    for (int q = 0; q < n; ++q) s.register_qubits.push_back(q);
    for (int q = 0; q + 1 < n; ++q) s.edges.push_back({q, q + 1});
    s.model.kind = kind;
    s.model.local_field_axes = field_axes;
    for (int q = 0; q < n; ++q)
        for (auto a : field_axes) s.fields.push_back({q, a});
    return s;
}

RealVector sorted(RealVector v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool has_violation(const ValidationReport& r, const std::string& needle) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("PauliString matches dense Kronecker products") {
    SeededRng rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 4;
        std::vector<std::pair<int, Pauli>> factors;
        std::vector<Matrix> dense;
        for (int q = 0; q < n; ++q) {
            const int r = static_cast<int>(rng.uniform() * 4);
            if (r == 3) {
                dense.push_back(Matrix::Identity(2, 2));
            } else {
                factors.emplace_back(q, static_cast<Pauli>(r));
                dense.push_back(pauli_matrix(static_cast<Pauli>(r)));
            }
        }
        const PauliString p(n, factors);
        CHECK((p.dense() - kron_all(dense)).norm() == 0.0);
    }
}

TEST_CASE("generator_terms") {
    SUBCASE("Ising edge is Z (x) Z") {
        const QubitNetwork net(chain(2, CouplingKind::IsingZZ));
        const auto gens = generator_terms(net);
        REQUIRE(gens.size() == 1);
        CHECK((gens[0].matrix() - kron(pauli_matrix(Pauli::Z), pauli_matrix(Pauli::Z))).norm() == 0.0);
    }
    SUBCASE("exchange edge is one generator XX + YY with spectrum {-2, 0, 0, 2}") {
        const QubitNetwork net(chain(2, CouplingKind::ExchangeXY));
        const auto gens = generator_terms(net);
        REQUIRE(gens.size() == 1);
        const Matrix xx = kron(pauli_matrix(Pauli::X), pauli_matrix(Pauli::X));
        const Matrix yy = kron(pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Y));
        CHECK((gens[0].matrix() - (xx + yy)).norm() == 0.0);
        const auto ev = hermitian_eig(gens[0]).eigenvalues;
        CHECK(ev(0) == doctest::Approx(-2.0));
        CHECK(std::abs(ev(1)) < 1e-14);
        CHECK(std::abs(ev(2)) < 1e-14);
        CHECK(ev(3) == doctest::Approx(2.0));
    }
    SUBCASE("Heisenberg chain with Z fields on three qubits has 2 + 3 generators") {
        const QubitNetwork net(chain(3, CouplingKind::Heisenberg, {Pauli::Z}));
        CHECK(net.num_generators() == 5);
        for (const auto& g : generator_terms(net)) {
            CHECK(hermitian_asymmetry(g.matrix()).max_deviation == 0.0);
        }
        CHECK(net.generator_labels()[0] == "edge(0,1):heisenberg");
        CHECK(net.generator_labels()[4] == "field(2):Z");
    }
    SUBCASE("custom model gives one generator per Pauli pair per edge") {
        NetworkSpec s = chain(3, CouplingKind::CustomPauli, {Pauli::X});
        s.model.custom_terms = {{Pauli::X, Pauli::Z}, {Pauli::Y, Pauli::Y}};
        const QubitNetwork net(s);
        CHECK(net.num_generators() == 2 * 2 + 3);
        const auto gens = generator_terms(net);
        const Matrix xzi = kron_all(std::vector<Matrix>{pauli_matrix(Pauli::X), pauli_matrix(Pauli::Z),
                                                        Matrix::Identity(2, 2)});
        CHECK((gens[0].matrix() - xzi).norm() == 0.0);
    }
    SUBCASE("embedded two-site spectrum is the 4x4 spectrum with multiplicity 2^(n-2)") {
        SeededRng rng(4);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 3 + trial % 2;
            const int a = static_cast<int>(rng.uniform() * n);
            int b = static_cast<int>(rng.uniform() * (n - 1));
            if (b >= a) ++b;
            NetworkSpec s;
            s.num_qubits = n;
            s.register_qubits = {0};
            s.edges = {{a, b}};
            s.model.kind = static_cast<CouplingKind>(trial % 3);
            const QubitNetwork net(s);
            const QubitNetwork pair(chain(2, s.model.kind));
            const auto big = sorted(hermitian_eig(generator_terms(net)[0]).eigenvalues);
            const auto small = hermitian_eig(generator_terms(pair)[0]).eigenvalues;
            const Eigen::Index mult = Eigen::Index{1} << (n - 2);
            RealVector expected(big.size());
            for (Eigen::Index i = 0; i < small.size(); ++i)
                expected.segment(i * mult, mult).setConstant(small(i));
            CHECK((big - sorted(expected)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("build_hamiltonian") {
    SUBCASE("zero weights") {
        const QubitNetwork net(chain(3, CouplingKind::Heisenberg, {Pauli::X, Pauli::Z}));
        CHECK(build_hamiltonian(net, WeightVector::zeros(net.num_generators())).matrix().norm() == 0.0);
    }
    SUBCASE("single ZZ edge") {
        const QubitNetwork net(chain(2, CouplingKind::IsingZZ));
        const double j = 0.8;
        const auto h = build_hamiltonian(net, WeightVector(std::vector<double>{j}));
        CHECK(h.matrix().isDiagonal());
        CHECK(h.matrix()(0, 0).real() == j);
        CHECK(h.matrix()(1, 1).real() == -j);
        CHECK(h.matrix()(2, 2).real() == -j);
        CHECK(h.matrix()(3, 3).real() == j);
    }
    SUBCASE("exchange weight 1 is exactly XX + YY") {
        const QubitNetwork net(chain(2, CouplingKind::ExchangeXY));
        const auto h = build_hamiltonian(net, WeightVector(std::vector<double>{1.0}));
        const Matrix expected = kron(pauli_matrix(Pauli::X), pauli_matrix(Pauli::X)) +
                                kron(pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Y));
        CHECK((h.matrix() - expected).norm() == 0.0);
    }
    SUBCASE("linear in the weights") {
        SeededRng rng(2);
        for (int trial = 0; trial < 20; ++trial) {
            const QubitNetwork net(oracle::random_network(rng, 4, true));
            const auto w1 = oracle::random_weights(net.num_generators(), rng);
            const auto w2 = oracle::random_weights(net.num_generators(), rng);
            const Matrix lhs = build_hamiltonian(net, WeightVector(RealVector(w1.values() + w2.values()))).matrix();
            const Matrix rhs = build_hamiltonian(net, w1).matrix() + build_hamiltonian(net, w2).matrix();
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
        }
    }
    SUBCASE("matches the dense weighted sum of generators") {
        SeededRng rng(3);
        const QubitNetwork net(oracle::random_network(rng, 3, false));
        const auto w = oracle::random_weights(net.num_generators(), rng);
        Matrix expected = Matrix::Zero(net.dim(), net.dim());
        const auto gens = generator_terms(net);
        for (std::size_t k = 0; k < gens.size(); ++k) expected += w[static_cast<Eigen::Index>(k)] * gens[k].matrix();
        CHECK((build_hamiltonian(net, w).matrix() - expected).norm() < 1e-13);
    }
    SUBCASE("length mismatch") {
        const QubitNetwork net(chain(2, CouplingKind::IsingZZ));
        CHECK_THROWS_AS(build_hamiltonian(net, WeightVector::zeros(2)), InvariantError);
    }
}

TEST_CASE("validate_network") {
    SUBCASE("valid chain") {
        const auto r = validate_network(chain(3, CouplingKind::Heisenberg, {Pauli::Z}));
        CHECK(r.violations.empty());
        CHECK(r.warnings.empty());
    }
    SUBCASE("self-loop") {
        auto s = chain(3, CouplingKind::Heisenberg);
        s.edges.push_back({0, 0});
        CHECK(has_violation(validate_network(s), "self-loop"));
    }
    SUBCASE("size cap") {
        auto s = chain(11, CouplingKind::IsingZZ);
        CHECK(has_violation(validate_network(s), "cap"));
        CHECK_THROWS_AS(QubitNetwork{s}, InvariantError);
    }
    SUBCASE("duplicates and ranges") {
        auto s = chain(3, CouplingKind::Heisenberg, {Pauli::Z});
        s.edges.push_back({1, 0});
        s.fields.push_back({2, Pauli::Z});
        s.register_qubits = {0, 0, 7};
        const auto r = validate_network(s);
        CHECK(has_violation(r, "duplicate"));
        CHECK(has_violation(r, "listed twice"));
        CHECK(has_violation(r, "out of range"));
    }
    SUBCASE("field axis must be enabled") {
        auto s = chain(2, CouplingKind::IsingZZ, {Pauli::Z});
        s.fields.push_back({0, Pauli::X});
        CHECK(has_violation(validate_network(s), "axis"));
    }
    SUBCASE("custom model needs terms") {
        auto s = chain(2, CouplingKind::CustomPauli);
        CHECK(has_violation(validate_network(s), "custom"));
    }
    SUBCASE("uncoupled register qubit is a warning only") {
        NetworkSpec s;
        s.num_qubits = 3;
        s.register_qubits = {0, 2};
        s.edges = {{0, 1}};
        const auto r = validate_network(s);
        CHECK(r.ok());
        REQUIRE(r.warnings.size() == 1);
        CHECK(r.warnings[0].find("register qubit 2") != std::string::npos);
    }
    SUBCASE("ancilla-free network is allowed") {
        CHECK(validate_network(chain(1, CouplingKind::IsingZZ)).ok());
    }
}

TEST_CASE("WeightVector rejects non-finite entries") {
    CHECK_THROWS_AS(WeightVector(std::vector<double>{1.0, std::nan("")}), InvariantError);
    CHECK_THROWS_AS(WeightVector(std::vector<double>{INFINITY}), InvariantError);
}
