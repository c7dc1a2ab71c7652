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
#include <numbers>
#include <span>
#include <vector>

#include "gateteach/channel.hpp"
#include "gateteach/network.hpp"
#include "gateteach/sampling.hpp"

namespace gateteach {

struct WeightInit {
    enum class Kind { Uniform, Given };
    Kind kind = Kind::Uniform;
    /// Uniform draws lie in (-half_width, half_width).
    double half_width = std::numbers::pi;
    std::vector<double> given;
};

struct WeightBounds {
    double lo = 0.0;
    double hi = 0.0;
};

struct TrainConfig {
    double kappa0 = 1.0;
    double decay_exponent = 0.5;
    /// Updates per sampled state (L).
    int inner_steps = 1;
    long max_outer_steps = 100000;
    double target_error = 1e-3;
    WeightInit weight_init;
    int restarts = 1;
    /// Empty: unconstrained. One entry: applies to every weight. Otherwise one
    /// entry per weight.
    std::vector<WeightBounds> box_bounds;
    std::uint64_t seed = 0;
    /// Outer steps between exact-fidelity checkpoints.
    long checkpoint_every = 50;
    /// Restarts evaluated concurrently; 1 keeps everything on the calling thread.
    int threads = 1;
    /// multi_restart skips remaining restarts once one has converged.
    bool stop_on_convergence = false;

    /// Throws InvariantError on kappa0 <= 0, L < 1, target_error outside (0,1), ...
    void validate() const;
};

struct CurvePoint {
    long step = 0;
    double exact_fidelity = 0.0;
    double best_fidelity = 0.0;
    double learning_rate = 0.0;
};

/// Evolving state of one training run.
struct TrainState {
    long step = 0;
    WeightVector weights;
    double learning_rate = 0.0;
    WeightVector best_weights;
    double best_fidelity = -1.0;
    std::vector<CurvePoint> curve;
    long samples_drawn = 0;
    long updates = 0;
};

struct TrainResult {
    WeightVector weights;
    double exact_fidelity = 0.0;
    double error = 1.0;
    bool converged = false;
    long steps_used = 0;
    long samples_drawn = 0;
    long updates = 0;
    std::vector<CurvePoint> learning_curve;
    std::uint64_t seed = 0;
    int restart_index = 0;
};

struct MultiRestartResult {
    TrainResult best;
    std::vector<TrainResult> restarts;
};

/// kappa0 * s^(-decay_exponent), s >= 1.
double learning_rate(const TrainConfig& config, long step);

struct FidelityGradient {
    double fidelity = 0.0;
    RealVector gradient;
};

/// Pair fidelity and its analytic gradient for an already diagonalized H(w).
///
/// With eta_0 = input (x) alpha, T = target * input and P the projector onto
/// T on the register, the derivative along generator h is
///   2 Re <P eta_t| dU[h] |eta_0>,   dU[h] = V (Gamma o V^dagger h V) V^dagger,
/// which is contracted as 2 Re tr(h M) with M = V G^T V^dagger and
/// G_mn = conj(y_m) Gamma_mn x_n, x = V^dagger eta_0, y = V^dagger P eta_t.
/// One O(d^3) contraction serves all K generators.
FidelityGradient pair_fidelity_and_gradient(const NetworkChannel& channel,
                                            std::span<const PauliSum> generators,
                                            const TrainingPair& pair, const UnitaryMatrix& target);

RealVector pair_fidelity_gradient(const QubitNetwork& net, const WeightVector& w,
                                  const TrainingPair& pair, const UnitaryMatrix& target,
                                  const AncillaPrep& anc);

/// Central differences of pair_fidelity, one pair of evaluations per weight.
RealVector finite_difference_gradient(const QubitNetwork& net, const WeightVector& w,
                                      const TrainingPair& pair, const UnitaryMatrix& target,
                                      const AncillaPrep& anc, double step);

/// Online stochastic gradient ascent: one Haar pair per outer step, L
/// updates on it, learning-rate decay, and exact-fidelity checkpoints.
/// Returns the best checkpointed weights.
TrainResult sgd_train(const QubitNetwork& net, const UnitaryMatrix& target, const AncillaPrep& anc,
                      const TrainConfig& config);

/// Seed used by restart r: the config seed for r = 0, derived otherwise.
std::uint64_t restart_seed(std::uint64_t seed, int restart_index);

MultiRestartResult multi_restart(const QubitNetwork& net, const UnitaryMatrix& target,
                                 const AncillaPrep& anc, const TrainConfig& config);

}  // namespace gateteach
