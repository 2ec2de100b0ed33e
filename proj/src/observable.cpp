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

#include "szne/observable.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace szne {

char pauli_char(Pauli p) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(p)];
}

std::string PauliTerm::label() const {
    if (ops.empty()) {
        return "I";
    }
    std::string out;
    for (const auto &[q, p] : ops) {
        if (!out.empty()) {
            out += ' ';
        }
        out += pauli_char(p);
        out += std::to_string(q);
    }
    return out;
}

Observable::Observable(std::vector<PauliTerm> terms) : terms_(std::move(terms)) {
    std::set<std::vector<std::pair<int, Pauli>>> seen;
    for (PauliTerm &t : terms_) {
        if (!std::isfinite(t.coefficient)) {
            throw std::invalid_argument("observable coefficient is not finite");
        }
        std::erase_if(t.ops, [](const auto &op) { return op.second == Pauli::I; });
        std::sort(t.ops.begin(), t.ops.end());
        for (std::size_t i = 0; i < t.ops.size(); ++i) {
            if (t.ops[i].first < 0) {
                throw std::invalid_argument("negative qubit index in Pauli string");
            }
            if (i > 0 && t.ops[i].first == t.ops[i - 1].first) {
                throw std::invalid_argument("repeated qubit in Pauli string " + t.label());
            }
        }
        if (!seen.insert(t.ops).second) {
            throw std::invalid_argument("duplicate Pauli string " + t.label());
        }
        norm_bound_ += std::abs(t.coefficient);
        locality_ = std::max(locality_, t.weight());
    }
    if (!(norm_bound_ > 0.0)) {
        throw std::invalid_argument("observable norm bound must be positive");
    }
}

Observable Observable::from_labels(const std::vector<std::pair<double, std::string>> &terms) {
    std::vector<PauliTerm> out;
    for (const auto &[c, text] : terms) {
        PauliTerm t{c, {}};
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            if (tok == "I") {
                continue;
            }
            Pauli p;
            switch (tok[0]) {
                case 'X':
                    p = Pauli::X;
                    break;
                case 'Y':
                    p = Pauli::Y;
                    break;
                case 'Z':
                    p = Pauli::Z;
                    break;
                default:
                    throw std::invalid_argument("bad Pauli token '" + tok + "'");
            }
            t.ops.emplace_back(std::stoi(tok.substr(1)), p);
        }
        out.push_back(std::move(t));
    }
    return Observable(std::move(out));
}

int Observable::max_qubit() const {
    int m = -1;
    for (const PauliTerm &t : terms_) {
        for (const auto &op : t.ops) {
            m = std::max(m, op.first);
        }
    }
    return m;
}

bool Observable::is_traceless() const { return identity_coefficient() == 0.0; }

double Observable::identity_coefficient() const {
    for (const PauliTerm &t : terms_) {
        if (t.ops.empty()) {
            return t.coefficient;
        }
    }
    return 0.0;
}

}  // namespace szne
