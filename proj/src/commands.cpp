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

#include "gateteach/commands.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace gateteach::cli {

using nlohmann::json;

namespace {

constexpr std::uint64_t kGradCheckStream = 0x67726164ULL;

json curve_to_json(const std::vector<CurvePoint>& curve) {
    json rows = json::array();
    for (const auto& p : curve) {
        rows.push_back({p.step, p.exact_fidelity, p.best_fidelity, p.learning_rate});
    }
    return rows;
}

json result_to_json(const TrainResult& r) {
    return {
        {"weights", r.weights.to_std()},
        {"exact_fidelity", r.exact_fidelity},
        {"error", r.error},
        {"converged", r.converged},
        {"steps_used", r.steps_used},
        {"samples_drawn", r.samples_drawn},
        {"updates", r.updates},
        {"seed", r.seed},
        {"restart_index", r.restart_index},
    };
}

/// Runs fn, mapping config problems and everything else to exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const InvariantError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string curve_to_csv(const std::vector<CurvePoint>& curve) {
    std::string out = "step,exact_fidelity,learning_rate\n";
    for (const auto& p : curve) {
        out += std::to_string(p.step) + "," + format_double(p.exact_fidelity) + "," +
               format_double(p.learning_rate) + "\n";
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
        f << contents;
        f.flush();
        if (!f) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

ExperimentConfig apply_overrides(ExperimentConfig config, const Overrides& overrides) {
    if (overrides.seed) config.train.seed = *overrides.seed;
    if (overrides.restarts) {
        if (*overrides.restarts < 1) throw ConfigError("--restarts", "must be >= 1");
        config.train.restarts = *overrides.restarts;
    }
    return config;
}

TeachOutput run_teach(const ExperimentConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const auto exp = resolve(config);
    const auto trained = multi_restart(exp.network, exp.target, exp.ancilla, config.train);
    const auto& best = trained.best;

    const NetworkChannel channel(exp.network, best.weights, exp.ancilla);
    const double exact = channel.exact_average_fidelity(exp.target);
    const auto vset = validation_set(exp.target, exp.network.register_size(),
                                     config.validation_set_size, config.train.seed);
    const auto vstats = batch_fidelity_stats(channel, vset, exp.target);

    json restarts = json::array();
    for (const auto& r : trained.restarts) {
        json summary = result_to_json(r);
        summary["curve"] = curve_to_json(r.learning_curve);
        restarts.push_back(std::move(summary));
    }

    TeachOutput out;
    out.converged = best.converged;
    out.curve_csv = curve_to_csv(best.learning_curve);
    out.report = {
        {"artifact", "gateteach"},
        {"version", kArtifactVersion},
        {"config", to_json(config)},
        {"seed", config.train.seed},
        {"generator_labels", exp.network.generator_labels()},
        {"result", result_to_json(best)},
        {"exact_average_fidelity", exact},
        {"error", 1.0 - exact},
        {"converged", best.converged},
        {"validation", {{"size", vstats.count}, {"mean", vstats.mean}, {"min", vstats.min}}},
        {"restarts", restarts},
    };
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    out.report["wall_clock_seconds"] = elapsed.count();
    return out;
}

json run_evaluate(const ExperimentConfig& config, const WeightVector& weights) {
    const auto exp = resolve(config);
    if (weights.size() != exp.network.num_generators()) {
        throw ConfigError("weights", "expected " + std::to_string(exp.network.num_generators()) +
                                         " weights, got " + std::to_string(weights.size()));
    }
    const NetworkChannel channel(exp.network, weights, exp.ancilla);
    const double exact = channel.exact_average_fidelity(exp.target);
    const auto vset = validation_set(exp.target, exp.network.register_size(),
                                     config.validation_set_size, config.train.seed);
    const auto vstats = batch_fidelity_stats(channel, vset, exp.target);
    return {
        {"exact_average_fidelity", exact},
        {"error", 1.0 - exact},
        {"validation", {{"size", vstats.count}, {"mean", vstats.mean}, {"min", vstats.min}}},
        {"weights", weights.to_std()},
    };
}

WeightVector load_weights(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open weights file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("", "weights file is not valid JSON: " + std::string(e.what()));
    }
    const json* arr = &j;
    std::string where = "weights";
    if (j.is_object() && j.contains("result") && j["result"].contains("weights")) {
        arr = &j["result"]["weights"];
        where = "result.weights";
    } else if (j.is_object() && j.contains("weights")) {
        arr = &j["weights"];
    }
    if (!arr->is_array()) throw ConfigError(where, "expected an array of numbers");
    std::vector<double> values;
    for (std::size_t i = 0; i < arr->size(); ++i) {
        if (!(*arr)[i].is_number()) {
            throw ConfigError(where + "[" + std::to_string(i) + "]", "expected a number");
        }
        values.push_back((*arr)[i].get<double>());
    }
    return WeightVector(values);
}

GradCheckReport run_grad_check(const ExperimentConfig& config, int num_pairs, bool corrupt_direction) {
    const auto exp = resolve(config);
    const auto& net = exp.network;
    const Eigen::Index k = net.num_generators();

    SeededRng rng(derive_seed(config.train.seed, kGradCheckStream));
    RealVector w0(k);
    if (config.train.weight_init.kind == WeightInit::Kind::Given) {
        w0 = WeightVector(config.train.weight_init.given).values();
    } else {
        for (Eigen::Index i = 0; i < k; ++i) {
            w0(i) = rng.uniform(-config.train.weight_init.half_width, config.train.weight_init.half_width);
        }
    }
    const WeightVector w(w0);

    std::vector<PauliSum> directions = net.generators();
    if (corrupt_direction && !directions.empty()) {
        for (auto& term : directions.front().terms) term.first *= 1.5;
    }

    GradCheckReport report;
    report.rows.resize(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) report.rows[static_cast<std::size_t>(i)].label = net.generator_labels()[static_cast<std::size_t>(i)];

    const NetworkChannel channel(net, w, exp.ancilla);
    for (int p = 0; p < num_pairs; ++p) {
        const auto pair = generate_training_pair(exp.target, net.register_size(), rng);
        const auto analytic = pair_fidelity_and_gradient(channel, directions, pair, exp.target).gradient;
        const auto fd = finite_difference_gradient(net, w, pair, exp.target, exp.ancilla, kGradCheckStep);
        for (Eigen::Index i = 0; i < k; ++i) {
            auto& row = report.rows[static_cast<std::size_t>(i)];
            const double dev = std::abs(analytic(i) - fd(i));
            if (p == 0 || dev > row.deviation) {
                row.analytic = analytic(i);
                row.finite_difference = fd(i);
                row.deviation = dev;
            }
            report.max_deviation = std::max(report.max_deviation, dev);
        }
    }
    report.passed = report.max_deviation <= kGradCheckTolerance;
    return report;
}

std::string run_sample(int num_qubits, long count, std::uint64_t seed) {
    if (count < 1) throw ConfigError("--count", "must be >= 1");
    if (num_qubits < 1 || num_qubits > kMaxNetworkQubits) {
        throw ConfigError("--qubits", "must lie in [1, " + std::to_string(kMaxNetworkQubits) + "]");
    }
    SeededRng rng(seed);
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    std::string out = "sample";
    for (Eigen::Index i = 0; i < dim; ++i) {
        out += ",re_" + std::to_string(i) + ",im_" + std::to_string(i);
    }
    out += "\n";
    for (long s = 0; s < count; ++s) {
        const auto state = haar_random_state(num_qubits, rng);
        out += std::to_string(s);
        for (Eigen::Index i = 0; i < dim; ++i) {
            out += "," + format_double(state.amplitudes()(i).real()) + "," +
                   format_double(state.amplitudes()(i).imag());
        }
        out += "\n";
    }
    return out;
}

int cmd_teach(const std::filesystem::path& config_path, const Overrides& overrides,
              const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto config = apply_overrides(load_config(config_path), overrides);
        const auto result = run_teach(config);
        const auto report_path = out_dir / config.output.report;
        const auto curve_path = out_dir / config.output.curve;
        write_file_atomic(report_path, result.report.dump(2) + "\n");
        write_file_atomic(curve_path, result.curve_csv);
        const auto& r = result.report["result"];
        out << (result.converged ? "converged" : "not converged")
            << ": exact fidelity " << format_double(result.report["exact_average_fidelity"].get<double>())
            << ", error " << format_double(result.report["error"].get<double>())
            << ", restart " << r["restart_index"].get<int>()
            << ", steps " << r["steps_used"].get<long>() << "\n"
            << "report: " << report_path.string() << "\ncurve: " << curve_path.string() << "\n";
        return result.converged ? kOk : kNotConverged;
    });
}

int cmd_evaluate(const std::filesystem::path& config_path, const std::filesystem::path& weights_path,
                 const Overrides& overrides, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto config = apply_overrides(load_config(config_path), overrides);
        const auto weights = load_weights(weights_path);
        out << run_evaluate(config, weights).dump(2) << "\n";
        return kOk;
    });
}

int cmd_grad_check(const std::filesystem::path& config_path, const Overrides& overrides,
                   bool corrupt_direction, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto config = apply_overrides(load_config(config_path), overrides);
        const auto report = run_grad_check(config, 5, corrupt_direction);
        out << std::left << std::setw(5) << "k" << std::setw(28) << "generator" << std::setw(24)
            << "analytic" << std::setw(24) << "finite_difference" << std::setw(14) << "deviation"
            << "status\n";
        out << std::setprecision(15);
        for (std::size_t k = 0; k < report.rows.size(); ++k) {
            const auto& row = report.rows[k];
            out << std::setw(5) << k << std::setw(28) << row.label << std::setw(24) << row.analytic
                << std::setw(24) << row.finite_difference << std::setw(14) << std::setprecision(3)
                << std::scientific << row.deviation << std::defaultfloat << std::setprecision(15)
                << (row.deviation <= kGradCheckTolerance ? "pass" : "FAIL") << "\n";
        }
        out << "max deviation " << std::scientific << std::setprecision(3) << report.max_deviation
            << std::defaultfloat << " (tolerance " << kGradCheckTolerance << "): "
            << (report.passed ? "pass" : "FAIL") << "\n";
        return report.passed ? kOk : kNotConverged;
    });
}

int cmd_sample(int num_qubits, long count, std::uint64_t seed, const std::filesystem::path& out_dir,
               std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto path = out_dir / "samples.csv";
        write_file_atomic(path, run_sample(num_qubits, count, seed));
        out << "wrote " << count << " states on " << num_qubits << " qubits to " << path.string() << "\n";
        return kOk;
    });
}

}  // namespace gateteach::cli
