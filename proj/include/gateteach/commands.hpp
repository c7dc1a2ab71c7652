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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gateteach/experiment.hpp"

/// Subcommands of the gateteach binary. Each cmd_* returns the process exit
/// status; the run_* functions do the work and are what the tests drive.
namespace gateteach::cli {

enum ExitCode : int {
    kOk = 0,
    kNotConverged = 2,  // teach: budget exhausted; grad-check: deviation above tolerance
    kConfigError = 3,
    kInternalError = 4,
};

inline constexpr double kGradCheckTolerance = 1e-6;
inline constexpr double kGradCheckStep = 1e-5;

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> restarts;
};

/// Applies command-line overrides to a loaded config.
ExperimentConfig apply_overrides(ExperimentConfig config, const Overrides& overrides);

struct TeachOutput {
    nlohmann::json report;
    std::string curve_csv;
    bool converged = false;
};

TeachOutput run_teach(const ExperimentConfig& config);

/// Learning curve as CSV with header "step,exact_fidelity,learning_rate".
std::string curve_to_csv(const std::vector<CurvePoint>& curve);

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

/// Writes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

nlohmann::json run_evaluate(const ExperimentConfig& config, const WeightVector& weights);

/// Accepts a bare JSON array, {"weights": [...]}, or a teach report.
WeightVector load_weights(const std::filesystem::path& path);

struct GradCheckRow {
    std::string label;
    double analytic = 0.0;
    double finite_difference = 0.0;
    double deviation = 0.0;
};

struct GradCheckReport {
    std::vector<GradCheckRow> rows;  // worst case per component over all pairs
    double max_deviation = 0.0;
    bool passed = false;
};

/// Analytic vs central-difference gradients on seeded random pairs at
/// seeded initial weights. corrupt_direction perturbs the first generator
/// on the analytic side only (negative control).
GradCheckReport run_grad_check(const ExperimentConfig& config, int num_pairs = 5,
                               bool corrupt_direction = false);

/// Rows "sample,re_0,im_0,re_1,im_1,...", one Haar state per row.
std::string run_sample(int num_qubits, long count, std::uint64_t seed);

int cmd_teach(const std::filesystem::path& config_path, const Overrides& overrides,
              const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err);
int cmd_evaluate(const std::filesystem::path& config_path, const std::filesystem::path& weights_path,
                 const Overrides& overrides, std::ostream& out, std::ostream& err);
int cmd_grad_check(const std::filesystem::path& config_path, const Overrides& overrides,
                   bool corrupt_direction, std::ostream& out, std::ostream& err);
int cmd_sample(int num_qubits, long count, std::uint64_t seed, const std::filesystem::path& out_dir,
               std::ostream& out, std::ostream& err);

}  // namespace gateteach::cli
