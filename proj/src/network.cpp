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

#include "gateteach/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace gateteach {

std::string coupling_kind_name(CouplingKind kind) {
    switch (kind) {
        case CouplingKind::IsingZZ: return "ising_zz";
        case CouplingKind::ExchangeXY: return "exchange_xy";
        case CouplingKind::Heisenberg: return "heisenberg";
        case CouplingKind::CustomPauli: return "custom";
    }
    return "unknown";
}

int CouplingModel::terms_per_edge() const {
    return kind == CouplingKind::CustomPauli ? static_cast<int>(custom_terms.size()) : 1;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        os << (i ? "; " : "") << violations[i];
    }
    return os.str();
}

ValidationReport validate_network(const NetworkSpec& spec) {
    ValidationReport report;
    auto& v = report.violations;
    const int n = spec.num_qubits;
    const auto reg_size = static_cast<int>(spec.register_qubits.size());

    if (n < 1) {
        v.push_back("network must have at least one qubit");
    }
    if (n > kMaxNetworkQubits) {
        v.push_back("network has " + std::to_string(n) + " qubits, above the cap of " +
                    std::to_string(kMaxNetworkQubits));
    }
    if (reg_size < 1) {
        v.push_back("register is empty");
    }
    if (reg_size > n) {
        v.push_back("register is larger than the network");
    }
    auto in_range = [n](int q) { return q >= 0 && q < n; };

    std::set<int> reg_seen;
    for (int q : spec.register_qubits) {
        if (!in_range(q)) {
            v.push_back("register qubit " + std::to_string(q) + " out of range");
        } else if (!reg_seen.insert(q).second) {
            v.push_back("register qubit " + std::to_string(q) + " listed twice");
        }
    }

    std::set<std::pair<int, int>> edge_seen;
    std::vector<int> degree(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (const auto& e : spec.edges) {
        const std::string name = "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
        if (!in_range(e.a) || !in_range(e.b)) {
            v.push_back(name + " has an index out of range");
            continue;
        }
        if (e.a == e.b) {
            v.push_back(name + " is a self-loop");
            continue;
        }
        if (!edge_seen.insert(std::minmax(e.a, e.b)).second) {
            v.push_back(name + " is a duplicate");
            continue;
        }
        ++degree[static_cast<std::size_t>(e.a)];
        ++degree[static_cast<std::size_t>(e.b)];
    }

    const auto& axes = spec.model.local_field_axes;
    std::set<std::pair<int, Pauli>> field_seen;
    for (const auto& f : spec.fields) {
        const std::string name =
            std::string("field (") + std::to_string(f.qubit) + "," + pauli_label(f.axis) + ")";
        if (!in_range(f.qubit)) {
            v.push_back(name + " has an index out of range");
        } else if (!field_seen.insert({f.qubit, f.axis}).second) {
            v.push_back(name + " is a duplicate");
        } else if (std::find(axes.begin(), axes.end(), f.axis) == axes.end()) {
            v.push_back(name + " uses an axis not enabled in the coupling model");
        }
    }

    if (spec.model.kind == CouplingKind::CustomPauli && spec.model.custom_terms.empty()) {
        v.push_back("custom coupling model has no Pauli pairs");
    }
    if (spec.model.kind != CouplingKind::CustomPauli && !spec.model.custom_terms.empty()) {
        v.push_back("Pauli pairs given for a non-custom coupling model");
    }

    if (n > 1) {
        for (int q : spec.register_qubits) {
            if (in_range(q) && degree[static_cast<std::size_t>(q)] == 0) {
                report.warnings.push_back("register qubit " + std::to_string(q) +
                                          " has no couplings");
            }
        }
    }
    return report;
}

WeightVector::WeightVector(RealVector values) : values_(std::move(values)) {
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_(k))) {
            throw InvariantError("WeightVector: entry " + std::to_string(k) + " is not finite");
        }
    }
}

WeightVector::WeightVector(const std::vector<double>& values)
    : WeightVector(RealVector(Eigen::Map<const RealVector>(values.data(),
                                                           static_cast<Eigen::Index>(values.size())))) {}

std::vector<double> WeightVector::to_std() const {
    return {values_.data(), values_.data() + values_.size()};
}

namespace {

PauliString two_site(int n, int a, Pauli pa, int b, Pauli pb) {
    return PauliString(n, {{a, pa}, {b, pb}});
}

}  // namespace

QubitNetwork::QubitNetwork(NetworkSpec spec) {
    const auto report = validate_network(spec);
    if (!report.ok()) {
        throw InvariantError("invalid network: " + report.summary());
    }
    const int n = spec.num_qubits;
    auto gens = std::make_shared<std::vector<PauliSum>>();
    auto labels = std::make_shared<std::vector<std::string>>();
    const std::string kind = coupling_kind_name(spec.model.kind);
    for (const auto& e : spec.edges) {
        const std::string edge = "edge(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
        switch (spec.model.kind) {
            case CouplingKind::IsingZZ:
                gens->push_back({{{1.0, two_site(n, e.a, Pauli::Z, e.b, Pauli::Z)}}});
                labels->push_back(edge + ":" + kind);
                break;
            case CouplingKind::ExchangeXY:
                gens->push_back({{{1.0, two_site(n, e.a, Pauli::X, e.b, Pauli::X)},
                                  {1.0, two_site(n, e.a, Pauli::Y, e.b, Pauli::Y)}}});
                labels->push_back(edge + ":" + kind);
                break;
            case CouplingKind::Heisenberg:
                gens->push_back({{{1.0, two_site(n, e.a, Pauli::X, e.b, Pauli::X)},
                                  {1.0, two_site(n, e.a, Pauli::Y, e.b, Pauli::Y)},
                                  {1.0, two_site(n, e.a, Pauli::Z, e.b, Pauli::Z)}}});
                labels->push_back(edge + ":" + kind);
                break;
            case CouplingKind::CustomPauli:
                for (const auto& [pa, pb] : spec.model.custom_terms) {
                    gens->push_back({{{1.0, two_site(n, e.a, pa, e.b, pb)}}});
                    labels->push_back(edge + ":" + pauli_label(pa) + pauli_label(pb));
                }
                break;
        }
    }
    for (const auto& f : spec.fields) {
        gens->push_back({{{1.0, PauliString(n, {{f.qubit, f.axis}})}}});
        labels->push_back("field(" + std::to_string(f.qubit) + "):" + pauli_label(f.axis));
    }
    spec_ = std::make_shared<const NetworkSpec>(std::move(spec));
    generators_ = std::move(gens);
    labels_ = std::move(labels);
}

std::vector<HermitianOperator> generator_terms(const QubitNetwork& net) {
    std::vector<HermitianOperator> out;
    out.reserve(net.generators().size());
    for (const auto& g : net.generators()) {
        out.emplace_back(g.dense());
    }
    return out;
}

HermitianOperator build_hamiltonian(const QubitNetwork& net, const WeightVector& w) {
    if (w.size() != net.num_generators()) {
        throw InvariantError("build_hamiltonian: weight vector has length " +
                             std::to_string(w.size()) + " but the network has " +
                             std::to_string(net.num_generators()) + " generators");
    }
    Matrix h = Matrix::Zero(net.dim(), net.dim());
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        net.generators()[static_cast<std::size_t>(k)].accumulate_into(h, w[k]);
    }
    return HermitianOperator(std::move(h));
}

}  // namespace gateteach
