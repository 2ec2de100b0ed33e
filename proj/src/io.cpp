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

#include "szne/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace szne {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, sep)) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

ojson dictionary_json(const FeatureDictionary &d) {
    ojson monomials = ojson::array();
    for (const auto &m : d.monomials()) {
        ojson factors = ojson::array();
        for (const MonomialFactor &f : m) {
            factors.push_back({f.coord, f.cos_power, f.sin_power});
        }
        monomials.push_back(factors);
    }
    ojson harmonics = ojson::array();
    for (const Harmonic &h : d.harmonics()) {
        harmonics.push_back({h.coord, h.k, h.sine ? 1 : 0});
    }
    ojson j;
    j["mode"] = dictionary_mode_name(d.mode());
    j["dimension"] = d.input_dimension();
    j["truncation"] = d.truncation();
    j["sampled"] = d.sampled();
    j["group_sizes"] = d.group_sizes();
    j["monomials"] = monomials;
    j["harmonics"] = harmonics;
    return j;
}

DictionaryMode mode_from(const std::string &s) {
    if (s == "independent") return DictionaryMode::independent;
    if (s == "grouped_monomial") return DictionaryMode::grouped_monomial;
    if (s == "grouped_harmonic") return DictionaryMode::grouped_harmonic;
    throw std::invalid_argument("unknown dictionary mode '" + s + "'");
}

FeatureDictionary dictionary_from(const json &j) {
    std::vector<std::vector<MonomialFactor>> monomials;
    for (const json &m : j.at("monomials")) {
        std::vector<MonomialFactor> factors;
        for (const json &f : m) {
            factors.push_back({f.at(0).get<int>(), f.at(1).get<int>(), f.at(2).get<int>()});
        }
        monomials.push_back(std::move(factors));
    }
    std::vector<Harmonic> harmonics;
    for (const json &h : j.at("harmonics")) {
        harmonics.push_back({h.at(0).get<int>(), h.at(1).get<int>(), h.at(2).get<int>() != 0});
    }
    return FeatureDictionary::from_parts(mode_from(j.at("mode").get<std::string>()), j.at("dimension").get<int>(),
                                         j.at("truncation").get<int>(), j.at("sampled").get<bool>(),
                                         j.at("group_sizes").get<std::vector<int>>(), std::move(monomials),
                                         std::move(harmonics));
}

ojson surrogate_object(const Surrogate &s) {
    ojson j;
    j["level"] = s.level;
    j["gamma"] = s.gamma;
    j["truncation"] = s.dictionary.truncation();
    j["weights"] = s.weights;
    j["seed"] = s.info.seed;
    j["samples"] = s.info.samples;
    j["budget_per_sample"] = s.info.budget_per_sample;
    j["dictionary"] = dictionary_json(s.dictionary);
    return j;
}

Surrogate surrogate_from(const json &j) {
    Surrogate s;
    s.level = j.at("level").get<int>();
    s.gamma = j.at("gamma").get<double>();
    s.weights = j.at("weights").get<std::vector<double>>();
    s.info.seed = j.at("seed").get<std::uint64_t>();
    s.info.samples = j.at("samples").get<std::int64_t>();
    s.info.budget_per_sample = j.at("budget_per_sample").get<std::int64_t>();
    s.dictionary = dictionary_from(j.at("dictionary"));
    if (s.weights.size() != s.dictionary.size()) {
        throw std::invalid_argument("surrogate weights do not match its dictionary");
    }
    return s;
}

template <class F>
auto guarded(const char *what, F &&f) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed ") + what + ": " + e.what());
    }
}

}  // namespace

std::string datasets_to_jsonl(const std::vector<Dataset> &datasets) {
    std::string out;
    for (const Dataset &ds : datasets) {
        for (const DataRecord &r : ds.records) {
            ojson j;
            j["x"] = r.x;
            j["y"] = r.y;
            j["lambda"] = r.level;
            j["shots"] = r.shots;
            j["seed"] = r.seed;
            out += j.dump();
            out += '\n';
        }
    }
    return out;
}

std::vector<Dataset> datasets_from_jsonl(const std::string &text, LabelMode mode) {
    return guarded("dataset", [&] {
        std::vector<Dataset> out;
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            const json j = json::parse(line);
            DataRecord r;
            r.x = j.at("x").get<std::vector<double>>();
            r.y = j.at("y").get<double>();
            r.level = j.at("lambda").get<int>();
            r.shots = j.at("shots").get<std::int64_t>();
            r.seed = j.at("seed").get<std::uint64_t>();
            auto it = std::find_if(out.begin(), out.end(), [&](const Dataset &d) { return d.level == r.level; });
            if (it == out.end()) {
                out.push_back({r.level, mode, {}});
                it = out.end() - 1;
            }
            it->records.push_back(std::move(r));
        }
        return out;
    });
}

std::string surrogate_to_json(const Surrogate &s) { return surrogate_object(s).dump(); }

Surrogate surrogate_from_json(const std::string &text) {
    return guarded("surrogate", [&] { return surrogate_from(json::parse(text)); });
}

std::string surrogates_to_json(const std::vector<Surrogate> &surrogates) {
    ojson arr = ojson::array();
    for (const Surrogate &s : surrogates) {
        arr.push_back(surrogate_object(s));
    }
    return arr.dump();
}

std::vector<Surrogate> surrogates_from_json(const std::string &text) {
    return guarded("surrogate", [&] {
        std::vector<Surrogate> out;
        for (const json &j : json::parse(text)) {
            out.push_back(surrogate_from(j));
        }
        return out;
    });
}

std::string runs_to_csv(const std::vector<MitigationRun> &runs) {
    if (runs.empty()) {
        return "";
    }
    const std::size_t d = runs.front().x.size();
    const std::vector<int> &levels = runs.front().levels;
    std::string out;
    for (std::size_t i = 0; i < d; ++i) {
        out += "x" + std::to_string(i) + ",";
    }
    for (int l : levels) {
        out += "z_l" + std::to_string(l) + ",";
    }
    for (int l : levels) {
        out += "tag_l" + std::to_string(l) + ",";
    }
    out += "estimate,ideal,residual\n";
    for (const MitigationRun &r : runs) {
        if (r.x.size() != d || r.levels != levels || r.z.size() != levels.size() || r.tags.size() != levels.size()) {
            throw std::invalid_argument("runs do not share one layout");
        }
        for (double v : r.x) {
            out += fmt(v) + ",";
        }
        for (double v : r.z) {
            out += fmt(v) + ",";
        }
        for (EntryTag t : r.tags) {
            out += std::string(entry_tag_name(t)) + ",";
        }
        out += fmt(r.estimate) + ",";
        out += (r.ideal ? fmt(*r.ideal) : "") + ",";
        out += (r.residual ? fmt(*r.residual) : "") + "\n";
    }
    return out;
}

std::vector<MitigationRun> runs_from_csv(const std::string &text) {
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line)) {
        return {};
    }
    const std::vector<std::string> header = split(line, ',');
    std::vector<std::size_t> xcol;
    std::vector<std::size_t> zcol;
    std::vector<std::size_t> tcol;
    std::vector<int> levels;
    std::size_t est = header.size();
    std::size_t ideal = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string &h = header[i];
        if (h.rfind("x", 0) == 0) {
            xcol.push_back(i);
        } else if (h.rfind("z_l", 0) == 0) {
            zcol.push_back(i);
            levels.push_back(std::stoi(h.substr(3)));
        } else if (h.rfind("tag_l", 0) == 0) {
            tcol.push_back(i);
        } else if (h == "estimate") {
            est = i;
        } else if (h == "ideal") {
            ideal = i;
        }
    }
    if (est == header.size() || tcol.size() != zcol.size()) {
        throw std::invalid_argument("malformed results table");
    }
    std::vector<MitigationRun> out;
    while (std::getline(ss, line)) {
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != header.size()) {
            throw std::invalid_argument("malformed results row");
        }
        MitigationRun r;
        r.levels = levels;
        for (std::size_t c : xcol) r.x.push_back(std::stod(cells[c]));
        for (std::size_t c : zcol) r.z.push_back(std::stod(cells[c]));
        for (std::size_t c : tcol) {
            r.tags.push_back(cells[c] == "predicted" ? EntryTag::predicted : EntryTag::measured);
        }
        r.estimate = std::stod(cells[est]);
        if (ideal < cells.size() && !cells[ideal].empty()) {
            r.set_ideal(std::stod(cells[ideal]));
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string columns_to_csv(const std::string &a_name, const std::vector<double> &a, const std::string &b_name,
                           const std::vector<double> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("column length mismatch");
    }
    std::string out = a_name + "," + b_name + "\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
        out += fmt(a[i]) + "," + fmt(b[i]) + "\n";
    }
    return out;
}

void write_text_file(const std::string &path, const std::string &content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::filesystem::create_directories(p.parent_path());
    }
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << content;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace szne
