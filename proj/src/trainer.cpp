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

#include "gateteach/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace gateteach {

namespace {

constexpr std::uint64_t kInitStream = 0x696e6974ULL;

void project(RealVector& w, const std::vector<WeightBounds>& bounds) {
    if (bounds.empty()) return;
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        const auto& b = bounds.size() == 1 ? bounds.front() : bounds[static_cast<std::size_t>(k)];
        w(k) = std::clamp(w(k), b.lo, b.hi);
    }
}

RealVector initial_weights(const TrainConfig& config, Eigen::Index k, SeededRng& rng) {
    RealVector w(k);
    if (config.weight_init.kind == WeightInit::Kind::Given) {
        if (static_cast<Eigen::Index>(config.weight_init.given.size()) != k) {
            throw InvariantError("initial weight vector has length " +
                                 std::to_string(config.weight_init.given.size()) +
                                 " but the network has " + std::to_string(k) + " generators");
        }
        for (Eigen::Index i = 0; i < k; ++i) w(i) = config.weight_init.given[static_cast<std::size_t>(i)];
    } else {
        const double a = config.weight_init.half_width;
        for (Eigen::Index i = 0; i < k; ++i) w(i) = rng.uniform(-a, a);
    }
    project(w, config.box_bounds);
    return w;
}

}  // namespace

void TrainConfig::validate() const {
    auto fail = [](const std::string& msg) { throw InvariantError("TrainConfig: " + msg); };
    if (!(kappa0 > 0.0) || !std::isfinite(kappa0)) fail("kappa0 must be positive");
    if (!std::isfinite(decay_exponent) || decay_exponent < 0.0) fail("decay_exponent must be >= 0");
    if (inner_steps < 1) fail("inner_steps must be >= 1");
    if (max_outer_steps < 0) fail("max_outer_steps must be >= 0");
    if (!(target_error > 0.0 && target_error < 1.0)) fail("target_error must lie in (0, 1)");
    if (restarts < 1) fail("restarts must be >= 1");
    if (checkpoint_every < 1) fail("checkpoint_every must be >= 1");
    if (threads < 1) fail("threads must be >= 1");
    if (weight_init.kind == WeightInit::Kind::Uniform &&
        (!(weight_init.half_width >= 0.0) || !std::isfinite(weight_init.half_width))) {
        fail("uniform init half width must be finite and >= 0");
    }
    for (const auto& b : box_bounds) {
        if (!(b.lo <= b.hi)) fail("box bound with lo > hi");
    }
}

double learning_rate(const TrainConfig& config, long step) {
    if (step < 1) {
        throw InvariantError("learning_rate: step counter starts at 1");
    }
    return config.kappa0 * std::pow(static_cast<double>(step), -config.decay_exponent);
}

FidelityGradient pair_fidelity_and_gradient(const NetworkChannel& channel,
                                            std::span<const PauliSum> generators,
                                            const TrainingPair& pair, const UnitaryMatrix& target) {
    if (target.dim() != pair.input.dim() || target.dim() != channel.register_dim()) {
        throw InvariantError("pair_fidelity_gradient: target, input and register dimensions differ");
    }
    const auto& spectrum = channel.spectrum();
    const auto& v = spectrum.eigenvectors;
    const auto& layout = channel.layout();
    const Eigen::Index dr = layout.selected_dim();
    const Eigen::Index da = layout.rest_dim();

    const Vector expected = target.matrix() * pair.input.amplitudes();
    const Vector x = v.adjoint() * channel.prepare(pair.input);
    Vector xt = x;
    for (Eigen::Index m = 0; m < xt.size(); ++m) {
        xt(m) *= std::polar(1.0, -spectrum.eigenvalues(m));
    }
    const Vector eta_t = v * xt;

    // Overlap of each ancilla branch with the expected register state.
    Vector overlap = Vector::Zero(da);
    for (Eigen::Index a = 0; a < da; ++a) {
        Complex acc = 0.0;
        for (Eigen::Index r = 0; r < dr; ++r) {
            acc += std::conj(expected(r)) * eta_t(layout.full_index(r, a));
        }
        overlap(a) = acc;
    }
    FidelityGradient out;
    out.fidelity = std::clamp(overlap.squaredNorm(), 0.0, 1.0);

    Vector projected(eta_t.size());
    for (Eigen::Index r = 0; r < dr; ++r) {
        for (Eigen::Index a = 0; a < da; ++a) {
            projected(layout.full_index(r, a)) = expected(r) * overlap(a);
        }
    }
    const Vector y = v.adjoint() * projected;
    const Matrix gamma = divided_difference_kernel(spectrum, 1.0);
    const Matrix g = y.conjugate().asDiagonal() * gamma * x.asDiagonal();
    const Matrix contracted = v * g.transpose() * v.adjoint();

    out.gradient.resize(static_cast<Eigen::Index>(generators.size()));
    for (std::size_t k = 0; k < generators.size(); ++k) {
        out.gradient(static_cast<Eigen::Index>(k)) =
            2.0 * generators[k].trace_product(contracted).real();
    }
    return out;
}

RealVector pair_fidelity_gradient(const QubitNetwork& net, const WeightVector& w,
                                  const TrainingPair& pair, const UnitaryMatrix& target,
                                  const AncillaPrep& anc) {
    const NetworkChannel channel(net, w, anc);
    return pair_fidelity_and_gradient(channel, net.generators(), pair, target).gradient;
}

RealVector finite_difference_gradient(const QubitNetwork& net, const WeightVector& w,
                                      const TrainingPair& pair, const UnitaryMatrix& target,
                                      const AncillaPrep& anc, double step) {
    if (!(step > 0.0)) {
        throw InvariantError("finite_difference_gradient: step must be positive");
    }
    RealVector grad(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        RealVector plus = w.values();
        RealVector minus = w.values();
        plus(k) += step;
        minus(k) -= step;
        const double fp = pair_fidelity(net, WeightVector(plus), pair, target, anc);
        const double fm = pair_fidelity(net, WeightVector(minus), pair, target, anc);
        grad(k) = (fp - fm) / (2.0 * step);
    }
    return grad;
}

TrainResult sgd_train(const QubitNetwork& net, const UnitaryMatrix& target, const AncillaPrep& anc,
                      const TrainConfig& config) {
    config.validate();
    const Eigen::Index k = net.num_generators();
    if (target.dim() != (Eigen::Index{1} << net.register_size())) {
        throw InvariantError("target has dimension " + std::to_string(target.dim()) +
                             " but the register has " + std::to_string(net.register_size()) +
                             " qubits");
    }
    if (config.box_bounds.size() > 1 && static_cast<Eigen::Index>(config.box_bounds.size()) != k) {
        throw InvariantError("box_bounds must have 1 or " + std::to_string(k) + " entries");
    }

    SeededRng init_rng(derive_seed(config.seed, kInitStream));
    SeededRng sample_rng(config.seed);

    TrainState state;
    state.weights = WeightVector(initial_weights(config, k, init_rng));
    state.learning_rate = config.kappa0;

    auto checkpoint = [&](long step) {
        const double f = exact_average_fidelity(net, state.weights, target, anc);
        if (f > state.best_fidelity) {
            state.best_fidelity = f;
            state.best_weights = state.weights;
        }
        state.curve.push_back({step, f, state.best_fidelity, state.learning_rate});
        return 1.0 - f < config.target_error;
    };

    bool done = checkpoint(0);
    for (long s = 1; !done && s <= config.max_outer_steps; ++s) {
        state.step = s;
        state.learning_rate = learning_rate(config, s);
        const TrainingPair pair = generate_training_pair(target, net.register_size(), sample_rng);
        ++state.samples_drawn;
        for (int j = 0; j < config.inner_steps; ++j) {
            const NetworkChannel channel(net, state.weights, anc);
            const auto fg = pair_fidelity_and_gradient(channel, net.generators(), pair, target);
            RealVector next = state.weights.values() + state.learning_rate * fg.gradient;
            project(next, config.box_bounds);
            state.weights = WeightVector(std::move(next));
            ++state.updates;
        }
        if (s % config.checkpoint_every == 0 || s == config.max_outer_steps) {
            done = checkpoint(s);
        }
    }

    TrainResult result;
    result.weights = state.best_weights;
    result.exact_fidelity = state.best_fidelity;
    result.error = 1.0 - state.best_fidelity;
    result.converged = result.error < config.target_error;
    result.steps_used = state.step;
    result.samples_drawn = state.samples_drawn;
    result.updates = state.updates;
    result.learning_curve = std::move(state.curve);
    result.seed = config.seed;
    return result;
}

std::uint64_t restart_seed(std::uint64_t seed, int restart_index) {
    return restart_index == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(restart_index));
}

MultiRestartResult multi_restart(const QubitNetwork& net, const UnitaryMatrix& target,
                                 const AncillaPrep& anc, const TrainConfig& config) {
    config.validate();
    auto run_one = [&](int r) {
        TrainConfig c = config;
        c.seed = restart_seed(config.seed, r);
        TrainResult res = sgd_train(net, target, anc, c);
        res.restart_index = r;
        return res;
    };

    MultiRestartResult out;
    out.restarts.reserve(static_cast<std::size_t>(config.restarts));
    auto any_converged = [&] {
        return std::any_of(out.restarts.begin(), out.restarts.end(),
                           [](const TrainResult& r) { return r.converged; });
    };
    for (int first = 0; first < config.restarts; first += config.threads) {
        if (config.stop_on_convergence && any_converged()) break;
        const int last = std::min(config.restarts, first + config.threads);
        if (last - first == 1) {
            out.restarts.push_back(run_one(first));
            continue;
        }
        std::vector<std::future<TrainResult>> pending;
        for (int r = first; r < last; ++r) {
            pending.push_back(std::async(std::launch::async, run_one, r));
        }
        for (auto& f : pending) {
            out.restarts.push_back(f.get());
        }
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < out.restarts.size(); ++r) {
        if (out.restarts[r].exact_fidelity > out.restarts[best].exact_fidelity) {
            best = r;
        }
    }
    out.best = out.restarts[best];
    return out;
}

}  // namespace gateteach
