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

#include "gateteach/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gateteach {

AncillaPrep AncillaPrep::all_zeros(int num_qubits) {
    return AncillaPrep(PureState::basis(num_qubits, 0));
}

AncillaPrep AncillaPrep::from_label(const std::string& bits) {
    Eigen::Index index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvariantError("ancilla label '" + bits + "' must contain only 0 and 1");
        }
        index = (index << 1) | (c == '1' ? 1 : 0);
    }
    return AncillaPrep(PureState::basis(static_cast<int>(bits.size()), index));
}

double KrausSet::completeness_deviation() const {
    if (operators.empty()) {
        return std::numeric_limits<double>::infinity();
    }
    const Eigen::Index d = operators.front().cols();
    Matrix sum = Matrix::Zero(d, d);
    for (const auto& k : operators) {
        sum += k.adjoint() * k;
    }
    return (sum - Matrix::Identity(d, d)).norm();
}

DensityMatrix KrausSet::apply(const DensityMatrix& rho) const {
    Matrix out = Matrix::Zero(rho.dim(), rho.dim());
    for (const auto& k : operators) {
        out += k * rho.matrix() * k.adjoint();
    }
    return DensityMatrix(std::move(out));
}

NetworkChannel::NetworkChannel(const QubitNetwork& net, const WeightVector& w,
                               const AncillaPrep& anc)
    : net_(net),
      ancilla_(anc.state().amplitudes()),
      layout_(net.num_qubits(), net.register_qubits()),
      spectrum_(hermitian_eig(build_hamiltonian(net, w))) {
    if (anc.num_qubits() != net.ancilla_size()) {
        throw InvariantError("ancilla state has " + std::to_string(anc.num_qubits()) +
                             " qubits but the network has " + std::to_string(net.ancilla_size()) +
                             " ancillas");
    }
}

void NetworkChannel::require_register_state(const PureState& input) const {
    if (input.num_qubits() != net_.register_size()) {
        throw InvariantError("input state has " + std::to_string(input.num_qubits()) +
                             " qubits but the register has " +
                             std::to_string(net_.register_size()));
    }
}

Vector NetworkChannel::prepare(const PureState& input) const {
    require_register_state(input);
    Vector eta(net_.dim());
    const auto& psi = input.amplitudes();
    for (Eigen::Index r = 0; r < layout_.selected_dim(); ++r) {
        for (Eigen::Index a = 0; a < layout_.rest_dim(); ++a) {
            eta(layout_.full_index(r, a)) = psi(r) * ancilla_(a);
        }
    }
    return eta;
}

Vector NetworkChannel::propagate(const Vector& v) const {
    const auto& vecs = spectrum_.eigenvectors;
    Vector x = vecs.adjoint() * v;
    for (Eigen::Index m = 0; m < x.size(); ++m) {
        x(m) *= std::polar(1.0, -spectrum_.eigenvalues(m));
    }
    return vecs * x;
}

UnitaryMatrix NetworkChannel::propagator() const {
    return expm_from_spectrum(spectrum_, 1.0);
}

Matrix NetworkChannel::evolved_blocks(const PureState& input) const {
    const Vector eta = propagate(prepare(input));
    Matrix blocks(layout_.selected_dim(), layout_.rest_dim());
    for (Eigen::Index r = 0; r < blocks.rows(); ++r) {
        for (Eigen::Index a = 0; a < blocks.cols(); ++a) {
            blocks(r, a) = eta(layout_.full_index(r, a));
        }
    }
    return blocks;
}

DensityMatrix NetworkChannel::evolve(const PureState& input) const {
    const Matrix blocks = evolved_blocks(input);
    return DensityMatrix(blocks * blocks.adjoint());
}

KrausSet NetworkChannel::kraus() const {
    const Matrix u = propagator().matrix();
    const Eigen::Index dr = layout_.selected_dim();
    const Eigen::Index da = layout_.rest_dim();
    KrausSet set;
    set.operators.reserve(static_cast<std::size_t>(da));
    for (Eigen::Index a = 0; a < da; ++a) {
        Matrix k = Matrix::Zero(dr, dr);
        for (Eigen::Index r = 0; r < dr; ++r) {
            const Eigen::Index row = layout_.full_index(r, a);
            for (Eigen::Index rp = 0; rp < dr; ++rp) {
                Complex acc = 0.0;
                for (Eigen::Index ap = 0; ap < da; ++ap) {
                    if (ancilla_(ap) != Complex(0.0, 0.0)) {
                        acc += u(row, layout_.full_index(rp, ap)) * ancilla_(ap);
                    }
                }
                k(r, rp) = acc;
            }
        }
        set.operators.push_back(std::move(k));
    }
    return set;
}

double NetworkChannel::exact_average_fidelity(const UnitaryMatrix& target) const {
    const Eigen::Index d = register_dim();
    if (target.dim() != d) {
        throw InvariantError("target has dimension " + std::to_string(target.dim()) +
                             " but the register has dimension " + std::to_string(d));
    }
    const auto set = kraus();
    double fe = 0.0;
    for (const auto& k : set.operators) {
        fe += std::norm(target.matrix().cwiseProduct(k.conjugate()).sum());
    }
    const auto dd = static_cast<double>(d);
    fe /= dd * dd;
    const double avg = (dd * fe + 1.0) / (dd + 1.0);
    return std::clamp(avg, 0.0, 1.0);
}

DensityMatrix evolve_register(const QubitNetwork& net, const WeightVector& w,
                              const PureState& input, const AncillaPrep& anc) {
    return NetworkChannel(net, w, anc).evolve(input);
}

KrausSet kraus_operators(const QubitNetwork& net, const WeightVector& w, const AncillaPrep& anc) {
    return NetworkChannel(net, w, anc).kraus();
}

double pair_fidelity(const NetworkChannel& channel, const TrainingPair& pair,
                     const UnitaryMatrix& target) {
    if (target.dim() != pair.input.dim()) {
        throw InvariantError("pair_fidelity: target and input dimensions differ");
    }
    const PureState expected(target.matrix() * pair.input.amplitudes());
    return fidelity(expected, channel.evolve(pair.input));
}

double pair_fidelity(const QubitNetwork& net, const WeightVector& w, const TrainingPair& pair,
                     const UnitaryMatrix& target, const AncillaPrep& anc) {
    return pair_fidelity(NetworkChannel(net, w, anc), pair, target);
}

BatchStats batch_fidelity_stats(const NetworkChannel& channel, std::span<const TrainingPair> pairs,
                                const UnitaryMatrix& target) {
    if (pairs.empty()) {
        throw InvariantError("batch_fidelity: empty batch");
    }
    // Neumaier-compensated sums keep the mean reproducible independent of batch size.
    double sum = 0.0, comp = 0.0;
    auto add = [](double& s, double& c, double x) {
        const double t = s + x;
        c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
        s = t;
    };
    std::vector<double> values;
    values.reserve(pairs.size());
    BatchStats stats;
    stats.min = 1.0;
    for (const auto& pair : pairs) {
        const double f = pair_fidelity(channel, pair, target);
        values.push_back(f);
        add(sum, comp, f);
        stats.min = std::min(stats.min, f);
    }
    const auto m = static_cast<double>(pairs.size());
    stats.count = pairs.size();
    stats.mean = (sum + comp) / m;
    if (pairs.size() > 1) {
        double ss = 0.0, ss_comp = 0.0;
        for (double f : values) {
            add(ss, ss_comp, (f - stats.mean) * (f - stats.mean));
        }
        stats.std_error = std::sqrt((ss + ss_comp) / (m - 1.0)) / std::sqrt(m);
    }
    return stats;
}

double batch_fidelity(const QubitNetwork& net, const WeightVector& w,
                      std::span<const TrainingPair> pairs, const UnitaryMatrix& target,
                      const AncillaPrep& anc) {
    return batch_fidelity_stats(NetworkChannel(net, w, anc), pairs, target).mean;
}

double exact_average_fidelity(const QubitNetwork& net, const WeightVector& w,
                              const UnitaryMatrix& target, const AncillaPrep& anc) {
    return NetworkChannel(net, w, anc).exact_average_fidelity(target);
}

}  // namespace gateteach
