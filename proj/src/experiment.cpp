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

#include "gateteach/experiment.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gateteach {

using nlohmann::json;

namespace {

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

/// Field access on one JSON object with path-qualified errors and a check
/// for unknown keys.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) {
            throw ConfigError(path_, "expected an object");
        }
    }

    bool has(const std::string& key) {
        known_.insert(key);
        return j_.contains(key) && !j_.at(key).is_null();
    }

    const json& at(const std::string& key) {
        if (!has(key)) {
            throw ConfigError(join(path_, key), "required field is missing");
        }
        return j_.at(key);
    }

    std::string path(const std::string& key) const { return join(path_, key); }

    double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
        if (!has(key)) {
            if (fallback) return *fallback;
            at(key);
        }
        const auto& v = j_.at(key);
        if (!v.is_number()) throw ConfigError(path(key), "expected a number");
        return v.get<double>();
    }

    long long integer(const std::string& key, std::optional<long long> fallback = std::nullopt) {
        if (!has(key)) {
            if (fallback) return *fallback;
            at(key);
        }
        const auto& v = j_.at(key);
        if (!v.is_number_integer()) throw ConfigError(path(key), "expected an integer");
        return v.get<long long>();
    }

    std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) {
        if (!has(key)) return fallback;
        const auto& v = j_.at(key);
        if (v.is_number_unsigned()) return v.get<std::uint64_t>();
        if (v.is_number_integer() && v.get<long long>() >= 0) {
            return static_cast<std::uint64_t>(v.get<long long>());
        }
        throw ConfigError(path(key), "expected a non-negative integer");
    }

    bool boolean(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        const auto& v = j_.at(key);
        if (!v.is_boolean()) throw ConfigError(path(key), "expected true or false");
        return v.get<bool>();
    }

    std::string string(const std::string& key, std::optional<std::string> fallback = std::nullopt) {
        if (!has(key)) {
            if (fallback) return *fallback;
            at(key);
        }
        const auto& v = j_.at(key);
        if (!v.is_string()) throw ConfigError(path(key), "expected a string");
        return v.get<std::string>();
    }

    void finish() const {
        for (const auto& [key, value] : j_.items()) {
            if (!known_.contains(key)) {
                throw ConfigError(join(path_, key), "unknown field");
            }
        }
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> known_;
};

const json& require_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw ConfigError(path, "expected an array");
    return j;
}

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path, "expected a number");
    return j.get<double>();
}

int require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
    return j.get<int>();
}

Pauli require_pauli(const json& j, const std::string& path) {
    if (j.is_string() && j.get<std::string>().size() == 1) {
        if (auto p = parse_pauli(j.get<std::string>()[0])) return *p;
    }
    throw ConfigError(path, "expected one of \"X\", \"Y\", \"Z\"");
}

std::vector<double> number_list(const json& j, const std::string& path) {
    require_array(j, path);
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(require_number(j[i], index_path(path, i)));
    }
    return out;
}

Complex parse_complex(const json& j, const std::string& path) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) {
        return {require_number(j[0], index_path(path, 0)), require_number(j[1], index_path(path, 1))};
    }
    throw ConfigError(path, "expected a complex number as [re, im]");
}

CouplingKind parse_coupling(const std::string& s, const std::string& path) {
    for (auto kind : {CouplingKind::IsingZZ, CouplingKind::ExchangeXY, CouplingKind::Heisenberg,
                      CouplingKind::CustomPauli}) {
        if (s == coupling_kind_name(kind)) return kind;
    }
    throw ConfigError(path, "unknown coupling \"" + s +
                                "\" (expected ising_zz, exchange_xy, heisenberg or custom)");
}

NetworkSpec parse_network(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    NetworkSpec spec;
    spec.num_qubits = static_cast<int>(r.integer("num_qubits"));

    const auto& reg = require_array(r.at("register"), r.path("register"));
    for (std::size_t i = 0; i < reg.size(); ++i) {
        spec.register_qubits.push_back(require_int(reg[i], index_path(r.path("register"), i)));
    }

    spec.model.kind = parse_coupling(r.string("coupling", std::string("heisenberg")), r.path("coupling"));
    if (r.has("custom_terms")) {
        const auto p = r.path("custom_terms");
        const auto& terms = require_array(r.at("custom_terms"), p);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const auto& t = terms[i];
            std::optional<Pauli> a, b;
            if (t.is_string() && t.get<std::string>().size() == 2) {
                a = parse_pauli(t.get<std::string>()[0]);
                b = parse_pauli(t.get<std::string>()[1]);
            }
            if (!a || !b) throw ConfigError(index_path(p, i), "expected a two-letter Pauli pair such as \"XZ\"");
            spec.model.custom_terms.emplace_back(*a, *b);
        }
    }

    if (r.has("field_axes")) {
        const auto p = r.path("field_axes");
        const auto& axes = require_array(r.at("field_axes"), p);
        for (std::size_t i = 0; i < axes.size(); ++i) {
            spec.model.local_field_axes.push_back(require_pauli(axes[i], index_path(p, i)));
        }
    }

    if (r.has("edges")) {
        const auto p = r.path("edges");
        const auto& edges = require_array(r.at("edges"), p);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto ep = index_path(p, i);
            if (!edges[i].is_array() || edges[i].size() != 2) throw ConfigError(ep, "expected [a, b]");
            spec.edges.push_back({require_int(edges[i][0], index_path(ep, 0)),
                                  require_int(edges[i][1], index_path(ep, 1))});
        }
    }

    if (r.has("fields")) {
        const auto p = r.path("fields");
        const auto& fields = require_array(r.at("fields"), p);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const auto fp = index_path(p, i);
            if (!fields[i].is_array() || fields[i].size() != 2) throw ConfigError(fp, "expected [qubit, axis]");
            spec.fields.push_back({require_int(fields[i][0], index_path(fp, 0)),
                                   require_pauli(fields[i][1], index_path(fp, 1))});
        }
    } else {
        // Default: every enabled axis on every qubit.
        for (int q = 0; q < spec.num_qubits; ++q) {
            for (auto axis : spec.model.local_field_axes) spec.fields.push_back({q, axis});
        }
    }
    r.finish();

    const auto report = validate_network(spec);
    if (!report.ok()) throw ConfigError(path, report.summary());
    return spec;
}

TargetSpec parse_target(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    TargetSpec t;
    const int forms = int(r.has("gate")) + int(r.has("unitary")) + int(r.has("planted_weights"));
    if (forms != 1) {
        throw ConfigError(path, "exactly one of \"gate\", \"unitary\" or \"planted_weights\" is required");
    }
    if (r.has("gate")) {
        t.kind = TargetSpec::Kind::Named;
        const auto name = r.string("gate");
        const auto kind = parse_gate_name(name);
        if (!kind) throw ConfigError(r.path("gate"), "unknown gate \"" + name + "\"");
        t.gate.kind = *kind;
        const auto arity = gate_arity(*kind);
        if (r.has("num_qubits")) {
            t.gate.num_qubits = static_cast<int>(r.integer("num_qubits"));
            if (arity && *arity != t.gate.num_qubits) {
                throw ConfigError(r.path("num_qubits"), name + " acts on " + std::to_string(*arity) + " qubits");
            }
        } else if (arity) {
            t.gate.num_qubits = *arity;
        } else {
            throw ConfigError(r.path("num_qubits"), name + " needs an explicit qubit count");
        }
    } else if (r.has("unitary")) {
        t.kind = TargetSpec::Kind::Explicit;
        const auto p = r.path("unitary");
        const auto& rows = require_array(r.at("unitary"), p);
        const auto d = static_cast<Eigen::Index>(rows.size());
        t.unitary = Matrix(d, d);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto rp = index_path(p, i);
            require_array(rows[i], rp);
            if (static_cast<Eigen::Index>(rows[i].size()) != d) throw ConfigError(rp, "matrix is not square");
            for (std::size_t k = 0; k < rows[i].size(); ++k) {
                t.unitary(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                    parse_complex(rows[i][k], index_path(rp, k));
            }
        }
        try {
            qubits_for_dimension(d);
            UnitaryMatrix check(t.unitary);
        } catch (const InvariantError& e) {
            throw ConfigError(p, e.what());
        }
    } else {
        t.kind = TargetSpec::Kind::Planted;
        t.planted_weights = number_list(r.at("planted_weights"), r.path("planted_weights"));
    }
    r.finish();
    return t;
}

TrainConfig parse_train(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    TrainConfig c;
    c.kappa0 = r.number("kappa0", c.kappa0);
    c.decay_exponent = r.number("decay_exponent", c.decay_exponent);
    c.inner_steps = static_cast<int>(r.integer("inner_steps", c.inner_steps));
    c.max_outer_steps = static_cast<long>(r.integer("max_outer_steps", c.max_outer_steps));
    c.target_error = r.number("target_error", c.target_error);
    c.restarts = static_cast<int>(r.integer("restarts", c.restarts));
    c.seed = r.unsigned_integer("seed", c.seed);
    c.checkpoint_every = static_cast<long>(r.integer("checkpoint_every", c.checkpoint_every));
    c.threads = static_cast<int>(r.integer("threads", c.threads));
    c.stop_on_convergence = r.boolean("stop_on_convergence", c.stop_on_convergence);

    if (r.has("weight_init")) {
        const auto p = r.path("weight_init");
        ObjectReader w(r.at("weight_init"), p);
        if (w.has("uniform") == w.has("given")) {
            throw ConfigError(p, "expected exactly one of \"uniform\" or \"given\"");
        }
        if (w.has("uniform")) {
            c.weight_init.kind = WeightInit::Kind::Uniform;
            c.weight_init.half_width = w.number("uniform");
        } else {
            c.weight_init.kind = WeightInit::Kind::Given;
            c.weight_init.given = number_list(w.at("given"), w.path("given"));
        }
        w.finish();
    }

    if (r.has("box_bounds")) {
        const auto p = r.path("box_bounds");
        const auto& b = require_array(r.at("box_bounds"), p);
        for (std::size_t i = 0; i < b.size(); ++i) {
            const auto bp = index_path(p, i);
            if (!b[i].is_array() || b[i].size() != 2) throw ConfigError(bp, "expected [lo, hi]");
            c.box_bounds.push_back({require_number(b[i][0], index_path(bp, 0)),
                                    require_number(b[i][1], index_path(bp, 1))});
        }
    }
    r.finish();
    try {
        c.validate();
    } catch (const InvariantError& e) {
        throw ConfigError(path, e.what());
    }
    return c;
}

}  // namespace

json complex_to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExperimentConfig parse_config(const json& j) {
    ObjectReader r(j, "");
    ExperimentConfig c;
    c.schema_version = static_cast<int>(r.integer("schema_version"));
    if (c.schema_version != kSchemaVersion) {
        throw ConfigError("schema_version", "unsupported version " + std::to_string(c.schema_version));
    }
    c.name = r.string("name", std::string());
    c.network = parse_network(r.at("network"), "network");
    c.target = parse_target(r.at("target"), "target");
    c.ancilla_state = r.string("ancilla_state", std::string());
    c.train = r.has("train") ? parse_train(r.at("train"), "train") : TrainConfig{};
    const auto vs = r.integer("validation_set_size", 200);
    if (vs < 1) throw ConfigError("validation_set_size", "must be >= 1");
    c.validation_set_size = static_cast<std::size_t>(vs);
    if (r.has("output")) {
        ObjectReader o(r.at("output"), "output");
        c.output.report = o.string("report", c.output.report);
        c.output.curve = o.string("curve", c.output.curve);
        o.finish();
    }
    r.finish();
    return c;
}

json to_json(const ExperimentConfig& c) {
    json net;
    net["num_qubits"] = c.network.num_qubits;
    net["register"] = c.network.register_qubits;
    net["coupling"] = coupling_kind_name(c.network.model.kind);
    if (c.network.model.kind == CouplingKind::CustomPauli) {
        json terms = json::array();
        for (const auto& [a, b] : c.network.model.custom_terms) {
            terms.push_back(std::string{pauli_label(a), pauli_label(b)});
        }
        net["custom_terms"] = terms;
    }
    json axes = json::array();
    for (auto a : c.network.model.local_field_axes) axes.push_back(std::string(1, pauli_label(a)));
    net["field_axes"] = axes;
    json edges = json::array();
    for (const auto& e : c.network.edges) edges.push_back({e.a, e.b});
    net["edges"] = edges;
    json fields = json::array();
    for (const auto& f : c.network.fields) fields.push_back({f.qubit, std::string(1, pauli_label(f.axis))});
    net["fields"] = fields;

    json target;
    switch (c.target.kind) {
        case TargetSpec::Kind::Named:
            target["gate"] = gate_name(c.target.gate.kind);
            target["num_qubits"] = c.target.gate.num_qubits;
            break;
        case TargetSpec::Kind::Explicit:
            target["unitary"] = matrix_to_json(c.target.unitary);
            break;
        case TargetSpec::Kind::Planted:
            target["planted_weights"] = c.target.planted_weights;
            break;
    }

    const auto& t = c.train;
    json train;
    train["kappa0"] = t.kappa0;
    train["decay_exponent"] = t.decay_exponent;
    train["inner_steps"] = t.inner_steps;
    train["max_outer_steps"] = t.max_outer_steps;
    train["target_error"] = t.target_error;
    train["restarts"] = t.restarts;
    train["seed"] = t.seed;
    train["checkpoint_every"] = t.checkpoint_every;
    train["threads"] = t.threads;
    train["stop_on_convergence"] = t.stop_on_convergence;
    if (t.weight_init.kind == WeightInit::Kind::Uniform) {
        train["weight_init"] = {{"uniform", t.weight_init.half_width}};
    } else {
        train["weight_init"] = {{"given", t.weight_init.given}};
    }
    if (!t.box_bounds.empty()) {
        json b = json::array();
        for (const auto& bb : t.box_bounds) b.push_back({bb.lo, bb.hi});
        train["box_bounds"] = b;
    }

    json out;
    out["schema_version"] = c.schema_version;
    if (!c.name.empty()) out["name"] = c.name;
    out["network"] = net;
    out["target"] = target;
    if (!c.ancilla_state.empty()) out["ancilla_state"] = c.ancilla_state;
    out["train"] = train;
    out["validation_set_size"] = c.validation_set_size;
    out["output"] = {{"report", c.output.report}, {"curve", c.output.curve}};
    return out;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("", "config " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

ResolvedExperiment resolve(const ExperimentConfig& config) {
    QubitNetwork net = [&] {
        try {
            return QubitNetwork(config.network);
        } catch (const InvariantError& e) {
            throw ConfigError("network", e.what());
        }
    }();

    const int n_anc = net.ancilla_size();
    AncillaPrep anc = AncillaPrep::all_zeros(n_anc);
    if (!config.ancilla_state.empty()) {
        if (static_cast<int>(config.ancilla_state.size()) != n_anc) {
            throw ConfigError("ancilla_state", "expected " + std::to_string(n_anc) + " bits");
        }
        try {
            anc = AncillaPrep::from_label(config.ancilla_state);
        } catch (const InvariantError& e) {
            throw ConfigError("ancilla_state", e.what());
        }
    }

    const int n_reg = net.register_size();
    const Eigen::Index d = Eigen::Index{1} << n_reg;
    std::optional<UnitaryMatrix> target;
    switch (config.target.kind) {
        case TargetSpec::Kind::Named:
            if (config.target.gate.num_qubits != n_reg) {
                throw ConfigError("target", gate_name(config.target.gate.kind) + " acts on " +
                                                std::to_string(config.target.gate.num_qubits) +
                                                " qubits but the register has " + std::to_string(n_reg));
            }
            target = build_gate(config.target.gate);
            break;
        case TargetSpec::Kind::Explicit:
            if (config.target.unitary.rows() != d) {
                throw ConfigError("target.unitary", "expected a " + std::to_string(d) + "x" +
                                                        std::to_string(d) + " matrix for the register");
            }
            target = UnitaryMatrix(config.target.unitary);
            break;
        case TargetSpec::Kind::Planted: {
            if (n_anc != 0) {
                throw ConfigError("target.planted_weights", "planted targets need a network without ancillas");
            }
            if (static_cast<Eigen::Index>(config.target.planted_weights.size()) != net.num_generators()) {
                throw ConfigError("target.planted_weights",
                                  "expected " + std::to_string(net.num_generators()) + " weights");
            }
            // Single Kraus operator: the propagator in register qubit order.
            const NetworkChannel channel(net, WeightVector(config.target.planted_weights), anc);
            target = UnitaryMatrix(channel.kraus().operators.front());
            break;
        }
    }

    if (config.train.weight_init.kind == WeightInit::Kind::Given &&
        static_cast<Eigen::Index>(config.train.weight_init.given.size()) != net.num_generators()) {
        throw ConfigError("train.weight_init.given",
                          "expected " + std::to_string(net.num_generators()) + " weights");
    }
    const auto nb = static_cast<Eigen::Index>(config.train.box_bounds.size());
    if (nb > 1 && nb != net.num_generators()) {
        throw ConfigError("train.box_bounds",
                          "expected 1 or " + std::to_string(net.num_generators()) + " entries");
    }
    return {std::move(net), std::move(*target), std::move(anc)};
}

}  // namespace gateteach
