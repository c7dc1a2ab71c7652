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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gateteach/commands.hpp"

int main(int argc, char** argv) {
    using namespace gateteach::cli;

    CLI::App app{"Train pairwise qubit-network couplings to implement a target gate"};
    app.require_subcommand(1);

    std::string config_path;
    std::string weights_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<int> restarts;
    bool corrupt_direction = false;
    int qubits = 1;
    long count = 1;

    auto* teach = app.add_subcommand("teach", "Run stochastic gradient training and write report.json + curve.csv");
    teach->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
    teach->add_option("--seed", seed, "Override train.seed");
    teach->add_option("--restarts", restarts, "Override train.restarts");
    teach->add_option("--out", out_dir, "Output directory");

    auto* evaluate = app.add_subcommand("evaluate", "Report fidelities of a given weight vector");
    evaluate->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
    evaluate->add_option("--weights", weights_path, "Weights JSON (array, {\"weights\": [...]}, or a report)")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate->add_option("--seed", seed, "Override train.seed (selects the validation set)");

    auto* grad = app.add_subcommand("grad-check", "Compare analytic and finite-difference gradients");
    grad->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
    grad->add_option("--seed", seed, "Override train.seed");
    grad->add_flag("--corrupt-direction", corrupt_direction, "Test hook: perturb the first generator")
        ->group("");

    auto* sample = app.add_subcommand("sample", "Write Haar-random states to samples.csv");
    sample->add_option("--qubits", qubits, "Qubits per state")->required();
    sample->add_option("--count", count, "Number of states")->required();
    sample->add_option("--seed", seed, "RNG seed (default 0)");
    sample->add_option("--out", out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    const Overrides overrides{seed, restarts};
    if (teach->parsed()) {
        return cmd_teach(config_path, overrides, out_dir, std::cout, std::cerr);
    }
    if (evaluate->parsed()) {
        return cmd_evaluate(config_path, weights_path, overrides, std::cout, std::cerr);
    }
    if (grad->parsed()) {
        return cmd_grad_check(config_path, overrides, corrupt_direction, std::cout, std::cerr);
    }
    return cmd_sample(qubits, count, seed.value_or(0), out_dir, std::cout, std::cerr);
}
