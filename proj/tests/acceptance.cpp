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

// Acceptance gate. One PASS/FAIL line per criterion.
//
//   acceptance            criteria 1-5, 7, 8
//   acceptance --slow     criterion 6 (Toffoli with ancillas)
//   acceptance N [N...]   selected criteria

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gateteach/commands.hpp"
#include "oracles.hpp"
#include "schema_check.hpp"

using namespace gateteach;

namespace {

// Pinned tolerances and budgets.
constexpr double kGradTol = 1e-6;
constexpr double kGradStep = 1e-5;
constexpr int kGradInstances = 120;
constexpr double kKrausTol = 1e-12;
constexpr double kCompletenessTol = 1e-10;
constexpr double kPartialTraceTol = 1e-12;
constexpr int kChannelInstances = 50;
constexpr std::size_t kHaarPairs = 10000;
constexpr double kHaarSigmas = 3.0;
constexpr int kHaarConfigs = 10;
constexpr double kTargetError = 1e-3;
constexpr std::uint64_t kPlantedSeed = 2;
constexpr int kPlantedRestarts = 20;
constexpr long kOuterSteps = 100000;
constexpr double kPhaseTol = 0.1;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string source_path(const std::string& rel) { return std::string(GATETEACH_SOURCE_DIR) + "/" + rel; }

NetworkSpec heisenberg_pair_with_z_fields() {
    NetworkSpec s;
    s.num_qubits = 2;
    s.register_qubits = {0, 1};
    s.edges = {{0, 1}};
    s.model.kind = CouplingKind::Heisenberg;
    s.model.local_field_axes = {Pauli::Z};
    s.fields = {{0, Pauli::Z}, {1, Pauli::Z}};
    return s;
}

/// Random network of 1-3 qubits; finite differences through the Taylor
/// exponential and the index-sum reduced state.
Outcome gradient_oracle() {
    SeededRng rng(1001);
    double worst = 0.0;
    int with_ancillas = 0;
    for (int i = 0; i < kGradInstances; ++i) {
        const auto spec = oracle::random_network(rng, 3, i % 2 == 0);
        const QubitNetwork net(spec);
        with_ancillas += net.ancilla_size() > 0;
        const auto w = oracle::random_weights(net.num_generators(), rng);
        const auto anc = oracle::random_basis_ancilla(net.ancilla_size(), rng);
        const auto target = haar_random_unitary(Eigen::Index{1} << net.register_size(), rng);
        const auto pair = generate_training_pair(target, net.register_size(), rng);
        const RealVector g = pair_fidelity_gradient(net, w, pair, target, anc);
        const Vector& phi = pair.target_output.amplitudes();
        auto f = [&](const RealVector& x) {
            const Matrix rho = oracle::reference_evolve(spec, net, WeightVector(x), pair.input.amplitudes(),
                                                        anc.state().amplitudes());
            return phi.dot(rho * phi).real();
        };
        for (Eigen::Index k = 0; k < g.size(); ++k) {
            RealVector up = w.values(), down = w.values();
            up(k) += kGradStep;
            down(k) -= kGradStep;
            worst = std::max(worst, std::abs(g(k) - (f(up) - f(down)) / (2 * kGradStep)));
        }
    }
    return {worst < kGradTol && with_ancillas > 0,
            std::to_string(kGradInstances) + " instances (" + std::to_string(with_ancillas) +
                " with ancillas), max deviation " + fmt("%.2e", worst)};
}

Outcome channel_correctness() {
    SeededRng rng(1002);
    double kraus_dev = 0.0, completeness = 0.0, ptrace_dev = 0.0;
    for (int i = 0; i < kChannelInstances; ++i) {
        const auto spec = oracle::random_network(rng, 4, true);
        const QubitNetwork net(spec);
        const auto w = oracle::random_weights(net.num_generators(), rng);
        const auto anc = oracle::random_basis_ancilla(net.ancilla_size(), rng);
        const auto psi = haar_random_state(net.register_size(), rng);
        const auto ks = kraus_operators(net, w, anc);
        completeness = std::max(completeness, ks.completeness_deviation());
        const auto direct = evolve_register(net, w, psi, anc);
        const auto via = ks.apply(DensityMatrix::from_pure(psi));
        kraus_dev = std::max(kraus_dev, (direct.matrix() - via.matrix()).cwiseAbs().maxCoeff());

        const auto eta = haar_random_state(spec.num_qubits, rng);
        std::vector<int> keep;
        for (int q = 0; q < spec.num_qubits; ++q)
            if (rng.uniform() < 0.5) keep.push_back(q);
        if (keep.empty()) keep.push_back(0);
        const auto reduced = partial_trace(eta, keep);
        const Matrix expected = oracle::partial_trace_basis_sum(eta.amplitudes(), spec.num_qubits, keep);
        ptrace_dev = std::max(ptrace_dev, (reduced.matrix() - expected).cwiseAbs().maxCoeff());
    }
    return {kraus_dev < kKrausTol && completeness < kCompletenessTol && ptrace_dev < kPartialTraceTol,
            "Kraus vs evolve " + fmt("%.2e", kraus_dev) + ", completeness " + fmt("%.2e", completeness) +
                ", partial trace " + fmt("%.2e", ptrace_dev)};
}

Outcome haar_consistency() {
    SeededRng rng(1003);
    double worst_sigmas = 0.0;
    int configs = 0;
    while (configs < kHaarConfigs) {
        const auto spec = oracle::random_network(rng, 2, true);
        if (spec.num_qubits != 2) continue;
        const QubitNetwork net(spec);
        const auto w = oracle::random_weights(net.num_generators(), rng);
        const auto anc = oracle::random_basis_ancilla(net.ancilla_size(), rng);
        const NetworkChannel ch(net, w, anc);
        const auto target = haar_random_unitary(ch.register_dim(), rng);
        const auto pairs = validation_set(target, net.register_size(), kHaarPairs, 5000 + configs);
        const auto stats = batch_fidelity_stats(ch, pairs, target);
        const double exact = ch.exact_average_fidelity(target);
        worst_sigmas = std::max(worst_sigmas, std::abs(stats.mean - exact) / stats.std_error);
        ++configs;
    }

    NetworkSpec one;
    one.num_qubits = 1;
    one.register_qubits = {0};
    one.model.local_field_axes = {Pauli::X};
    one.fields = {{0, Pauli::X}};
    const QubitNetwork net(one);
    const NetworkChannel ch(net, WeightVector::zeros(1), AncillaPrep::all_zeros(0));
    const UnitaryMatrix x{pauli_matrix(Pauli::X)};
    const double exact = ch.exact_average_fidelity(x);
    const auto stats = batch_fidelity_stats(ch, validation_set(x, 1, kHaarPairs, 77), x);
    const double x_sigmas = std::abs(stats.mean - exact) / stats.std_error;
    const bool pass = worst_sigmas < kHaarSigmas && std::abs(exact - 1.0 / 3.0) < 1e-14 && x_sigmas < kHaarSigmas;
    return {pass, "worst |MC - exact| " + fmt("%.2f", worst_sigmas) + " SE over 10 configs; w=0 vs X exact " +
                      fmt("%.17g", exact) + ", MC " + fmt("%.2f", x_sigmas) + " SE"};
}

Outcome planted_recovery() {
    const QubitNetwork net(heisenberg_pair_with_z_fields());
    SeededRng rng(kPlantedSeed);
    std::vector<double> planted(3);
    for (auto& v : planted) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const auto anc = AncillaPrep::all_zeros(0);
    const UnitaryMatrix target{NetworkChannel(net, WeightVector(planted), anc).kraus().operators.front()};
    TrainConfig c;
    c.seed = kPlantedSeed;
    c.restarts = kPlantedRestarts;
    c.max_outer_steps = kOuterSteps;
    c.target_error = kTargetError;
    const auto r = multi_restart(net, target, anc, c);
    return {r.best.error < kTargetError, "w* = (" + fmt("%.4f", planted[0]) + ", " + fmt("%.4f", planted[1]) + ", " +
                                             fmt("%.4f", planted[2]) + "), best eps " + fmt("%.2e", r.best.error) +
                                             " at restart " + std::to_string(r.best.restart_index)};
}

/// Residuals of the CZ phase equations for H = J ZZ + h0 Z0 + h1 Z1:
/// 2J + 2h1 = 0, 2J + 2h0 = 0, 2h0 + 2h1 = pi (mod 2 pi).
std::array<double, 3> cz_phase_residuals(double j, double h0, double h1) {
    auto wrap = [](double x) { return std::remainder(x, 2 * std::numbers::pi); };
    return {wrap(2 * j + 2 * h1), wrap(2 * j + 2 * h0), wrap(2 * h0 + 2 * h1 - std::numbers::pi)};
}

Outcome cz_reachable() {
    auto config = load_config(source_path("configs/cz_ising.json"));
    config.train.max_outer_steps = kOuterSteps;
    const auto exp = resolve(config);
    const auto r = multi_restart(exp.network, exp.target, exp.ancilla, config.train);

    // Oracle weights solve the phase equations exactly.
    const WeightVector oracle_w(std::vector<double>{std::numbers::pi / 4, -std::numbers::pi / 4, -std::numbers::pi / 4});
    const double oracle_f = exact_average_fidelity(exp.network, oracle_w, exp.target, exp.ancilla);
    double oracle_res = 0.0;
    for (double v : cz_phase_residuals(oracle_w[0], oracle_w[1], oracle_w[2])) oracle_res = std::max(oracle_res, std::abs(v));

    double learned_res = 0.0;
    for (double v : cz_phase_residuals(r.best.weights[0], r.best.weights[1], r.best.weights[2]))
        learned_res = std::max(learned_res, std::abs(v));

    const bool pass = r.best.error < kTargetError && std::abs(oracle_f - 1.0) < 1e-12 && oracle_res < 1e-12 &&
                      learned_res < kPhaseTol;
    return {pass, "eps " + fmt("%.2e", r.best.error) + ", learned phase residual " + fmt("%.2e", learned_res) +
                      " rad, oracle fidelity " + fmt("%.17g", oracle_f)};
}

Outcome toffoli_exploration() {
    const auto config = load_config(source_path("configs/toffoli_ancillas.json"));
    const auto a = cli::run_teach(config);
    const auto b = cli::run_teach(config);
    auto ra = a.report, rb = b.report;
    ra.erase("wall_clock_seconds");
    rb.erase("wall_clock_seconds");
    const bool deterministic = ra.dump() == rb.dump() && a.curve_csv == b.curve_csv;

    bool monotone = true;
    for (const auto& restart : a.report["restarts"]) {
        double prev = -1.0;
        for (const auto& row : restart["curve"]) {
            const double best = row[2].get<double>();
            monotone &= best >= prev;
            prev = best;
        }
    }
    const auto schema = oracle::SchemaChecker::from_file(source_path("docs/report.schema.json"));
    const bool valid = schema.check(a.report).empty();
    const double eps = a.report["error"].get<double>();
    return {deterministic && monotone && valid,
            std::string("deterministic ") + (deterministic ? "yes" : "NO") + ", monotone best " +
                (monotone ? "yes" : "NO") + ", schema " + (valid ? "ok" : "INVALID") + ", best eps " +
                fmt("%.4g", eps) + " (not required below 1e-3)"};
}

Outcome determinism() {
    const auto config = load_config(source_path("configs/planted_heisenberg_2q.json"));
    const auto a = cli::run_teach(config);
    const auto b = cli::run_teach(config);
    auto ra = a.report, rb = b.report;
    ra.erase("wall_clock_seconds");
    rb.erase("wall_clock_seconds");
    const bool reports = ra.dump(2) == rb.dump(2);
    bool curves = a.curve_csv == b.curve_csv && a.report["restarts"].size() == b.report["restarts"].size();
    for (std::size_t i = 0; curves && i < a.report["restarts"].size(); ++i) {
        const auto& ca = a.report["restarts"][i]["curve"];
        const auto& cb = b.report["restarts"][i]["curve"];
        curves &= ca.size() == cb.size();
        for (std::size_t k = 0; curves && k < ca.size(); ++k)
            for (std::size_t c = 0; c < 4; ++c) curves &= ca[k][c].get<double>() == cb[k][c].get<double>();
    }
    return {reports && curves, std::string("reports byte-identical ") + (reports ? "yes" : "NO") +
                                   ", curves bit-identical " + (curves ? "yes" : "NO")};
}

Outcome schedule_shape() {
    TrainConfig c;
    c.kappa0 = 0.37;
    c.decay_exponent = 0.5;
    const double ratio = learning_rate(c, 1) / learning_rate(c, 4);

    NetworkSpec s;
    s.num_qubits = 1;
    s.register_qubits = {0};
    s.model.local_field_axes = {Pauli::X, Pauli::Z};
    s.fields = {{0, Pauli::X}, {0, Pauli::Z}};
    const QubitNetwork net(s);
    // Y is out of reach for X and Z fields, so every step runs.
    TrainConfig t;
    t.inner_steps = 4;
    t.max_outer_steps = 200;
    t.target_error = 1e-15;
    const auto r = sgd_train(net, UnitaryMatrix{build_gate({GateKind::Y, 1})}, AncillaPrep::all_zeros(0), t);
    const bool pass = std::abs(ratio - 2.0) < 1e-15 && r.samples_drawn == 200 && r.updates == 4 * r.samples_drawn;
    return {pass, "kappa(1)/kappa(4) = " + fmt("%.17g", ratio) + ", L = 4: " + std::to_string(r.updates) +
                      " updates for " + std::to_string(r.samples_drawn) + " samples"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all = {
        {1, "gradient oracle", 30, gradient_oracle},
        {2, "channel correctness", 10, channel_correctness},
        {3, "Haar consistency", 60, haar_consistency},
        {4, "planted-solution recovery", 300, planted_recovery},
        {5, "CZ from Ising couplings and Z fields", 300, cz_reachable},
        {6, "Toffoli with ancillas (extended)", 1800, toffoli_exploration},
        {7, "determinism", 60, determinism},
        {8, "schedule and L updates per sample", 1, schedule_shape},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--slow") {
            selected.push_back(6);
        } else {
            selected.push_back(std::stoi(arg));
        }
    }
    if (selected.empty()) selected = {1, 2, 3, 4, 5, 7, 8};

    int failures = 0;
    for (int id : selected) {
        const auto& c = all.at(static_cast<std::size_t>(id - 1));
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = secs < c.budget_seconds;
        const bool pass = o.pass && in_budget;
        failures += !pass;
        std::printf("%s criterion %d: %s | %s | %.2f s (budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                    o.detail.c_str(), secs, c.budget_seconds, in_budget ? "" : ", EXCEEDED");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
