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

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gateteach/linalg.hpp"
#include "gateteach/pauli.hpp"

namespace gateteach {

inline constexpr int kMaxNetworkQubits = 10;

enum class CouplingKind { IsingZZ, ExchangeXY, Heisenberg, CustomPauli };

std::string coupling_kind_name(CouplingKind kind);

/// Pairwise interaction family plus the axes allowed for local fields.
///
///   IsingZZ     h_edge = Z_i Z_j
///   ExchangeXY  h_edge = X_i X_j + Y_i Y_j
///   Heisenberg  h_edge = X_i X_j + Y_i Y_j + Z_i Z_j
///   CustomPauli one generator per listed pair, e.g. {XZ, YY}
///
/// The named families lock all terms of an edge to one weight.
struct CouplingModel {
    CouplingKind kind = CouplingKind::Heisenberg;
    std::vector<std::pair<Pauli, Pauli>> custom_terms;
    std::vector<Pauli> local_field_axes;

    int terms_per_edge() const;
};

struct Edge {
    int a = 0;
    int b = 0;
};

struct FieldSite {
    int qubit = 0;
    Pauli axis = Pauli::Z;
};

/// Plain description of a network, as read from a config file.
struct NetworkSpec {
    int num_qubits = 0;
    std::vector<int> register_qubits;
    std::vector<Edge> edges;
    std::vector<FieldSite> fields;
    CouplingModel model;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate_network(const NetworkSpec& spec);

/// Real weight vector, one entry per generator.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(RealVector values);
    explicit WeightVector(const std::vector<double>& values);

    static WeightVector zeros(Eigen::Index k) { return WeightVector(RealVector::Zero(k)); }

    const RealVector& values() const { return values_; }
    Eigen::Index size() const { return values_.size(); }
    double operator[](Eigen::Index k) const { return values_(k); }
    std::vector<double> to_std() const;

private:
    RealVector values_;
};

/// Validated, immutable network. Generators are built once at construction
/// and shared between copies.
class QubitNetwork {
public:
    /// Throws InvariantError carrying the validation summary.
    explicit QubitNetwork(NetworkSpec spec);

    const NetworkSpec& spec() const { return *spec_; }
    int num_qubits() const { return spec_->num_qubits; }
    int register_size() const { return static_cast<int>(spec_->register_qubits.size()); }
    int ancilla_size() const { return num_qubits() - register_size(); }
    const std::vector<int>& register_qubits() const { return spec_->register_qubits; }
    Eigen::Index dim() const { return Eigen::Index{1} << num_qubits(); }

    Eigen::Index num_generators() const { return static_cast<Eigen::Index>(generators_->size()); }
    const std::vector<PauliSum>& generators() const { return *generators_; }

    /// Human-readable label per generator, e.g. "edge(0,1):heisenberg", "field(2):Z".
    const std::vector<std::string>& generator_labels() const { return *labels_; }

private:
    std::shared_ptr<const NetworkSpec> spec_;
    std::shared_ptr<const std::vector<PauliSum>> generators_;
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Dense generators (h_1, ..., h_K): edge terms in declaration order, then
/// local-field terms.
std::vector<HermitianOperator> generator_terms(const QubitNetwork& net);

/// H(w) = sum_k w_k h_k.
HermitianOperator build_hamiltonian(const QubitNetwork& net, const WeightVector& w);

}  // namespace gateteach
