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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gateteach/channel.hpp"
#include "gateteach/gates.hpp"
#include "gateteach/network.hpp"
#include "gateteach/trainer.hpp"

namespace gateteach {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "1.0.0";

/// Malformed or inconsistent experiment config. The message starts with the
/// JSON path of the offending field, e.g. "train.kappa0: must be positive".
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message), path_(path) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

struct TargetSpec {
    enum class Kind { Named, Explicit, Planted };
    Kind kind = Kind::Named;
    /// Named: gate and its qubit count.
    NamedGate gate;
    /// Explicit: row-major unitary.
    Matrix unitary;
    /// Planted: weights w* of the same network, target = e^{-iH(w*)}.
    std::vector<double> planted_weights;
};

struct OutputPaths {
    std::string report = "report.json";
    std::string curve = "curve.csv";
};

struct ExperimentConfig {
    int schema_version = kSchemaVersion;
    std::string name;
    NetworkSpec network;
    TargetSpec target;
    /// Basis-state bit string; empty selects all zeros.
    std::string ancilla_state;
    TrainConfig train;
    std::size_t validation_set_size = 200;
    OutputPaths output;
};

ExperimentConfig parse_config(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& config);

/// Reads and parses a config file; I/O and JSON syntax errors become ConfigError.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Everything a run needs, validated against each other.
struct ResolvedExperiment {
    QubitNetwork network;
    UnitaryMatrix target;
    AncillaPrep ancilla;
};

ResolvedExperiment resolve(const ExperimentConfig& config);

nlohmann::json complex_to_json(Complex z);
nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace gateteach
