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

#include <span>
#include <string>
#include <vector>

#include "gateteach/linalg.hpp"
#include "gateteach/network.hpp"
#include "gateteach/sampling.hpp"

namespace gateteach {

/// Fixed preparation of the ancilla qubits (possibly zero of them).
class AncillaPrep {
public:
    explicit AncillaPrep(PureState state) : state_(std::move(state)) {}

    static AncillaPrep all_zeros(int num_qubits);

    /// Computational basis state from a bit string such as "010"; "" means
    /// no ancillas.
    static AncillaPrep from_label(const std::string& bits);

    const PureState& state() const { return state_; }
    int num_qubits() const { return state_.num_qubits(); }

private:
    PureState state_;
};

struct KrausSet {
    std::vector<Matrix> operators;

    /// Frobenius norm of sum_a K_a^dagger K_a - I.
    double completeness_deviation() const;

    DensityMatrix apply(const DensityMatrix& rho) const;
};

/// The register channel E_w for one weight vector. Holds the spectral
/// decomposition of H(w) so repeated evaluations share one eigensolve.
///
/// Register qubit k of an input state sits at network qubit register[k];
/// ancilla qubits are the remaining network qubits in ascending order. The
/// evolution time is fixed to t = 1.
class NetworkChannel {
public:
    NetworkChannel(const QubitNetwork& net, const WeightVector& w, const AncillaPrep& anc);

    const QubitNetwork& network() const { return net_; }
    const SpectralDecomposition& spectrum() const { return spectrum_; }
    const SubsystemSplit& layout() const { return layout_; }
    Eigen::Index register_dim() const { return layout_.selected_dim(); }

    /// eta_0 = input (x) alpha in network ordering.
    Vector prepare(const PureState& input) const;

    /// e^{-iH} v through the spectral decomposition.
    Vector propagate(const Vector& v) const;

    /// Full network propagator e^{-iH(w)}.
    UnitaryMatrix propagator() const;

    /// Amplitudes of eta_t arranged as a (register x ancilla) matrix.
    Matrix evolved_blocks(const PureState& input) const;

    DensityMatrix evolve(const PureState& input) const;
    KrausSet kraus() const;

    /// (d F_e + 1)/(d + 1) with F_e = sum_a |tr(U^dagger K_a)|^2 / d^2.
    double exact_average_fidelity(const UnitaryMatrix& target) const;

private:
    void require_register_state(const PureState& input) const;

    QubitNetwork net_;
    Vector ancilla_;
    SubsystemSplit layout_;
    SpectralDecomposition spectrum_;
};

DensityMatrix evolve_register(const QubitNetwork& net, const WeightVector& w,
                              const PureState& input, const AncillaPrep& anc);

KrausSet kraus_operators(const QubitNetwork& net, const WeightVector& w, const AncillaPrep& anc);

/// <psi|U^dagger E_w[psi] U|psi> for one training pair.
double pair_fidelity(const QubitNetwork& net, const WeightVector& w, const TrainingPair& pair,
                     const UnitaryMatrix& target, const AncillaPrep& anc);
double pair_fidelity(const NetworkChannel& channel, const TrainingPair& pair,
                     const UnitaryMatrix& target);

struct BatchStats {
    double mean = 0.0;
    double min = 0.0;
    /// Sample standard deviation divided by sqrt(M); zero for M = 1.
    double std_error = 0.0;
    std::size_t count = 0;
};

BatchStats batch_fidelity_stats(const NetworkChannel& channel, std::span<const TrainingPair> pairs,
                                const UnitaryMatrix& target);

/// Mean pair fidelity over a non-empty batch.
double batch_fidelity(const QubitNetwork& net, const WeightVector& w,
                      std::span<const TrainingPair> pairs, const UnitaryMatrix& target,
                      const AncillaPrep& anc);

double exact_average_fidelity(const QubitNetwork& net, const WeightVector& w,
                              const UnitaryMatrix& target, const AncillaPrep& anc);

}  // namespace gateteach
