// Copyright 2026 The szne Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "szne/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace szne {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

void check_keys(const json &j, const std::string &where, std::initializer_list<const char *> allowed) {
    if (!j.is_object()) {
        throw std::invalid_argument("config section '" + where + "' must be an object");
    }
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto &item : j.items()) {
        if (!ok.count(item.key())) {
            throw std::invalid_argument("unknown config key '" + where + "." + item.key() + "'");
        }
    }
}

template <class T>
void read(const json &j, const char *key, T &out) {
    if (j.contains(key)) {
        out = j.at(key).get<T>();
    }
}

CircuitFamily parse_family(const std::string &s) {
    if (s == "ghz") return CircuitFamily::ghz;
    if (s == "hva") return CircuitFamily::hva;
    if (s == "hea") return CircuitFamily::hea;
    throw std::invalid_argument("unknown circuit family '" + s + "'");
}

Backend parse_backend(const std::string &s) {
    if (s == "auto") return Backend::automatic;
    if (s == "dense") return Backend::dense;
    if (s == "lightcone") return Backend::lightcone;
    if (s == "analytic") return Backend::analytic;
    throw std::invalid_argument("unknown backend '" + s + "'");
}

DictionaryMode parse_dictionary(const std::string &s) {
    if (s == "independent") return DictionaryMode::independent;
    if (s == "grouped_monomial") return DictionaryMode::grouped_monomial;
    if (s == "grouped_harmonic") return DictionaryMode::grouped_harmonic;
    throw std::invalid_argument("unknown dictionary mode '" + s + "'");
}

SurrogateKind parse_kind(const std::string &s) {
    if (s == "ridge") return SurrogateKind::ridge;
    if (s == "kernel") return SurrogateKind::kernel;
    throw std::invalid_argument("unknown surrogate kind '" + s + "'");
}

Amplification parse_amplification(const std::string &s) {
    if (s == "rate_formula") return Amplification::rate_formula;
    if (s == "channel_repetition") return Amplification::channel_repetition;
    if (s == "structural_fold") return Amplification::structural_fold;
    throw std::invalid_argument("unknown amplification '" + s + "'");
}

const char *amplification_name(Amplification a) {
    switch (a) {
    case Amplification::rate_formula:
        return "rate_formula";
    case Amplification::channel_repetition:
        return "channel_repetition";
    case Amplification::structural_fold:
        return "structural_fold";
    }
    return "rate_formula";
}

NoiseComponent parse_component(const json &j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "global_depolarizing") {
        check_keys(j, "noise.components", {"type", "p"});
        GlobalDepolarizing g;
        read(j, "p", g.p);
        return g;
    }
    if (type == "local_depolarizing") {
        check_keys(j, "noise.components", {"type", "p1", "p2"});
        LocalDepolarizing l;
        read(j, "p1", l.p1);
        read(j, "p2", l.p2);
        return l;
    }
    if (type == "thermal") {
        check_keys(j, "noise.components", {"type", "t1", "t2", "gate_time_1q", "gate_time_2q", "excited_population"});
        Thermal t;
        read(j, "t1", t.t1);
        read(j, "t2", t.t2);
        read(j, "gate_time_1q", t.gate_time_1q);
        read(j, "gate_time_2q", t.gate_time_2q);
        read(j, "excited_population", t.excited_population);
        return t;
    }
    if (type == "coherent") {
        check_keys(j, "noise.components", {"type", "low", "high"});
        Coherent c;
        read(j, "low", c.low);
        read(j, "high", c.high);
        return c;
    }
    throw std::invalid_argument("unknown noise component '" + type + "'");
}

ojson component_json(const NoiseComponent &c) {
    return std::visit(
        [](const auto &v) -> ojson {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GlobalDepolarizing>) {
                return {{"type", "global_depolarizing"}, {"p", v.p}};
            } else if constexpr (std::is_same_v<T, LocalDepolarizing>) {
                return {{"type", "local_depolarizing"}, {"p1", v.p1}, {"p2", v.p2}};
            } else if constexpr (std::is_same_v<T, Thermal>) {
                return {{"type", "thermal"},         {"t1", v.t1},
                        {"t2", v.t2},                {"gate_time_1q", v.gate_time_1q},
                        {"gate_time_2q", v.gate_time_2q}, {"excited_population", v.excited_population}};
            } else {
                return {{"type", "coherent"}, {"low", v.low}, {"high", v.high}};
            }
        },
        c);
}

void validate(const ExperimentConfig &c) {
    static const std::set<std::string> tasks = {"metrology", "vqa", "hybrid", "data_efficiency", "mitigation"};
    if (!tasks.count(c.task)) {
        throw std::invalid_argument("unknown task '" + c.task + "'");
    }
    if (c.circuit.n < 1 || c.circuit.layers < 1) {
        throw std::invalid_argument("circuit size must be positive");
    }
    c.noise.validate();
    if (c.levels.empty()) {
        throw std::invalid_argument("no noise levels given");
    }
    for (int l : c.levels) {
        if (l < 1) {
            throw std::invalid_argument("noise level must be at least 1");
        }
    }
    if (c.shots.inference < 1 || c.shots.training < 1 || c.shots.validation < 1) {
        throw std::invalid_argument("invalid shot count");
    }
    if (c.surrogate.samples < 1) {
        throw std::invalid_argument("empty budget: at least one training input per level required");
    }
    if (c.surrogate.gamma < 0.0 || c.surrogate.truncation < 0) {
        throw std::invalid_argument("invalid surrogate settings");
    }
    if (!(c.inputs.radius > 0.0) || c.inputs.test_count < 1) {
        throw std::invalid_argument("invalid input settings");
    }
    if (c.repeats < 1 || c.threads < 1 || c.optimizer.iterations < 0 || c.data_efficiency.repeats < 1) {
        throw std::invalid_argument("repeat, thread and iteration counts must be positive");
    }
}

}  // namespace

const char *circuit_family_name(CircuitFamily f) {
    switch (f) {
    case CircuitFamily::ghz:
        return "ghz";
    case CircuitFamily::hva:
        return "hva";
    case CircuitFamily::hea:
        return "hea";
    }
    return "ghz";
}

const char *vqa_estimator_name(VqaEstimator e) {
    switch (e) {
    case VqaEstimator::unmitigated:
        return "unmitigated";
    case VqaEstimator::zne:
        return "zne";
    case VqaEstimator::szne:
        return "szne";
    }
    return "szne";
}

const char *backend_name(Backend b) {
    switch (b) {
    case Backend::automatic:
        return "auto";
    case Backend::dense:
        return "dense";
    case Backend::lightcone:
        return "lightcone";
    case Backend::analytic:
        return "analytic";
    }
    return "auto";
}

VqaEstimator parse_vqa_estimator(const std::string &s) {
    if (s == "unmitigated") return VqaEstimator::unmitigated;
    if (s == "zne") return VqaEstimator::zne;
    if (s == "szne") return VqaEstimator::szne;
    throw std::invalid_argument("unknown estimator '" + s + "'");
}

ExperimentConfig parse_config(const std::string &json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
    ExperimentConfig c;
    try {
        check_keys(j, "config",
                   {"task", "circuit", "hamiltonian", "noise", "levels", "extrapolation", "shots", "surrogate",
                    "inputs", "hybrid", "optimizer", "data_efficiency", "seed", "repeats", "threads", "output_dir"});
        read(j, "task", c.task);
        if (j.contains("circuit")) {
            const json &s = j["circuit"];
            check_keys(s, "circuit", {"family", "n", "layers", "backend"});
            if (s.contains("backend")) c.circuit.backend = parse_backend(s["backend"].get<std::string>());
            if (s.contains("family")) c.circuit.family = parse_family(s["family"].get<std::string>());
            read(s, "n", c.circuit.n);
            read(s, "layers", c.circuit.layers);
        }
        if (j.contains("hamiltonian")) {
            const json &s = j["hamiltonian"];
            check_keys(s, "hamiltonian", {"model", "j", "h", "jx", "jy", "jz"});
            if (s.contains("model")) c.model = parse_hamiltonian_model(s["model"].get<std::string>());
            read(s, "j", c.couplings.j);
            read(s, "h", c.couplings.h);
            read(s, "jx", c.couplings.jx);
            read(s, "jy", c.couplings.jy);
            read(s, "jz", c.couplings.jz);
        }
        if (j.contains("noise")) {
            const json &s = j["noise"];
            check_keys(s, "noise", {"amplification", "components"});
            if (s.contains("amplification")) {
                c.noise.amplification = parse_amplification(s["amplification"].get<std::string>());
            }
            if (s.contains("components")) {
                for (const json &comp : s["components"]) {
                    c.noise.components.push_back(parse_component(comp));
                }
            }
        }
        read(j, "levels", c.levels);
        if (j.contains("extrapolation")) c.extrapolation = parse_extrapolation(j["extrapolation"].get<std::string>());
        if (j.contains("shots")) {
            const json &s = j["shots"];
            check_keys(s, "shots", {"inference", "training", "validation"});
            read(s, "inference", c.shots.inference);
            read(s, "training", c.shots.training);
            read(s, "validation", c.shots.validation);
        }
        if (j.contains("surrogate")) {
            const json &s = j["surrogate"];
            check_keys(s, "surrogate",
                       {"kind", "dictionary", "truncation", "gamma", "samples", "feature_cap", "feature_samples"});
            if (s.contains("kind")) c.surrogate.kind = parse_kind(s["kind"].get<std::string>());
            if (s.contains("dictionary")) c.surrogate.dictionary = parse_dictionary(s["dictionary"].get<std::string>());
            read(s, "truncation", c.surrogate.truncation);
            read(s, "gamma", c.surrogate.gamma);
            read(s, "samples", c.surrogate.samples);
            read(s, "feature_cap", c.surrogate.feature_cap);
            read(s, "feature_samples", c.surrogate.feature_samples);
        }
        if (j.contains("inputs")) {
            const json &s = j["inputs"];
            check_keys(s, "inputs", {"radius", "test_count", "grid_low", "grid_high", "min_abs_ideal"});
            read(s, "radius", c.inputs.radius);
            read(s, "test_count", c.inputs.test_count);
            read(s, "grid_low", c.inputs.grid_low);
            read(s, "grid_high", c.inputs.grid_high);
            read(s, "min_abs_ideal", c.inputs.min_abs_ideal);
        }
        if (j.contains("hybrid")) {
            const json &s = j["hybrid"];
            check_keys(s, "hybrid", {"eta", "validation_count"});
            read(s, "eta", c.hybrid.eta);
            read(s, "validation_count", c.hybrid.validation_count);
        }
        if (j.contains("optimizer")) {
            const json &s = j["optimizer"];
            check_keys(s, "optimizer", {"estimator", "iterations", "learning_rate", "fd_step", "init_radius"});
            if (s.contains("estimator")) c.optimizer.estimator = parse_vqa_estimator(s["estimator"].get<std::string>());
            read(s, "iterations", c.optimizer.iterations);
            read(s, "learning_rate", c.optimizer.learning_rate);
            read(s, "fd_step", c.optimizer.fd_step);
            read(s, "init_radius", c.optimizer.init_radius);
        }
        if (j.contains("data_efficiency")) {
            const json &s = j["data_efficiency"];
            check_keys(s, "data_efficiency", {"sizes", "repeats"});
            read(s, "sizes", c.data_efficiency.sizes);
            read(s, "repeats", c.data_efficiency.repeats);
        }
        read(j, "seed", c.seed);
        read(j, "repeats", c.repeats);
        read(j, "threads", c.threads);
        read(j, "output_dir", c.output_dir);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("invalid config value: ") + e.what());
    }
    validate(c);
    return c;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_to_json(const ExperimentConfig &c) {
    ojson j;
    j["task"] = c.task;
    j["circuit"] = {{"family", circuit_family_name(c.circuit.family)}, {"n", c.circuit.n}, {"layers", c.circuit.layers},
                    {"backend", backend_name(c.circuit.backend)}};
    j["hamiltonian"] = {{"model", hamiltonian_model_name(c.model)},
                        {"j", c.couplings.j},
                        {"h", c.couplings.h},
                        {"jx", c.couplings.jx},
                        {"jy", c.couplings.jy},
                        {"jz", c.couplings.jz}};
    ojson comps = ojson::array();
    for (const NoiseComponent &comp : c.noise.components) {
        comps.push_back(component_json(comp));
    }
    j["noise"] = {{"amplification", amplification_name(c.noise.amplification)}, {"components", comps}};
    j["levels"] = c.levels;
    j["extrapolation"] = extrapolation_name(c.extrapolation);
    j["shots"] = {{"inference", c.shots.inference}, {"training", c.shots.training}, {"validation", c.shots.validation}};
    j["surrogate"] = {{"kind", c.surrogate.kind == SurrogateKind::ridge ? "ridge" : "kernel"},
                      {"dictionary", dictionary_mode_name(c.surrogate.dictionary)},
                      {"truncation", c.surrogate.truncation},
                      {"gamma", c.surrogate.gamma},
                      {"samples", c.surrogate.samples},
                      {"feature_cap", c.surrogate.feature_cap},
                      {"feature_samples", c.surrogate.feature_samples}};
    j["inputs"] = {{"radius", c.inputs.radius},
                   {"test_count", c.inputs.test_count},
                   {"grid_low", c.inputs.grid_low},
                   {"grid_high", c.inputs.grid_high},
                   {"min_abs_ideal", c.inputs.min_abs_ideal}};
    j["hybrid"] = {{"eta", c.hybrid.eta}, {"validation_count", c.hybrid.validation_count}};
    j["optimizer"] = {{"estimator", vqa_estimator_name(c.optimizer.estimator)},
                      {"iterations", c.optimizer.iterations},
                      {"learning_rate", c.optimizer.learning_rate},
                      {"fd_step", c.optimizer.fd_step},
                      {"init_radius", c.optimizer.init_radius}};
    j["data_efficiency"] = {{"sizes", c.data_efficiency.sizes}, {"repeats", c.data_efficiency.repeats}};
    j["seed"] = c.seed;
    j["repeats"] = c.repeats;
    j["threads"] = c.threads;
    j["output_dir"] = c.output_dir;
    return j.dump(2);
}

}  // namespace szne
