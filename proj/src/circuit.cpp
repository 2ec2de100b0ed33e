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

#include "szne/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace szne {

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CNOT:
            return "CNOT";
    }
    return "?";
}

ParamCircuit::ParamCircuit(int qubit_count, std::vector<Layer> layers, std::vector<int> group_map, int fold_factor)
    : qubit_count_(qubit_count),
      layers_(std::move(layers)),
      group_map_(std::move(group_map)),
      group_count_(0),
      fold_factor_(fold_factor) {
    if (qubit_count_ < 1) {
        throw std::invalid_argument("qubit count must be positive");
    }
    if (fold_factor_ < 1) {
        throw std::invalid_argument("invalid fold factor");
    }
    auto check = [&](int q) {
        if (q < 0 || q >= qubit_count_) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
        }
    };
    std::vector<int> seen(group_map_.size(), 0);
    for (const Layer &layer : layers_) {
        for (const Gate &g : layer.clifford_block) {
            check(g.q0);
            if (g.kind == GateKind::CNOT) {
                check(g.q1);
                if (g.q0 == g.q1) {
                    throw std::invalid_argument("CNOT control equals target");
                }
            }
        }
        for (const RotationSlot &r : layer.rotation_slots) {
            check(r.qubit);
            if (r.slot < 0 || r.slot >= static_cast<int>(group_map_.size())) {
                throw std::invalid_argument("undeclared slot " + std::to_string(r.slot));
            }
            if (seen[r.slot]++) {
                throw std::invalid_argument("slot collision on slot " + std::to_string(r.slot));
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw std::invalid_argument("declared slot never used");
    }
    for (int g : group_map_) {
        if (g < 0) {
            throw std::invalid_argument("negative group id");
        }
        group_count_ = std::max(group_count_, g + 1);
    }
    std::vector<int> sizes = group_sizes();
    if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) {
        throw std::invalid_argument("group ids must be contiguous");
    }
}

std::vector<int> ParamCircuit::group_sizes() const {
    std::vector<int> sizes(group_count_, 0);
    for (int g : group_map_) {
        ++sizes[g];
    }
    return sizes;
}

std::size_t ParamCircuit::gate_count() const {
    std::size_t n = 0;
    for (const Layer &layer : layers_) {
        n += layer.clifford_block.size() + layer.rotation_slots.size();
    }
    return n;
}

std::vector<double> ParamCircuit::slot_angles(std::span<const double> group_values) const {
    if (static_cast<int>(group_values.size()) != group_count_) {
        throw std::invalid_argument("assignment covers " + std::to_string(group_values.size()) + " groups, circuit has " +
                                    std::to_string(group_count_));
    }
    std::vector<double> out(group_map_.size());
    for (std::size_t s = 0; s < group_map_.size(); ++s) {
        out[s] = group_values[group_map_[s]];
    }
    return out;
}

std::vector<Op> flatten(const ParamCircuit &c) {
    std::vector<Op> ops;
    ops.reserve(c.gate_count());
    for (const Layer &layer : c.layers()) {
        for (const Gate &g : layer.clifford_block) {
            ops.push_back({g.kind, g.q0, g.q1, -1});
        }
        for (const RotationSlot &r : layer.rotation_slots) {
            ops.push_back({GateKind::Z, r.qubit, -1, r.slot});
        }
    }
    return ops;
}

CircuitBuilder::CircuitBuilder(int qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count < 1) {
        throw std::invalid_argument("qubit count must be positive");
    }
}

void CircuitBuilder::check_qubit(int q) const {
    if (q < 0 || q >= qubit_count_) {
        throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
    }
}

CircuitBuilder &CircuitBuilder::gate(GateKind kind, int q0, int q1) {
    check_qubit(q0);
    if (kind == GateKind::CNOT) {
        check_qubit(q1);
    }
    if (layers_.empty() || !layers_.back().rotation_slots.empty()) {
        layers_.emplace_back();
    }
    layers_.back().clifford_block.push_back({kind, q0, kind == GateKind::CNOT ? q1 : -1});
    return *this;
}

int CircuitBuilder::rz(int q, int group) {
    check_qubit(q);
    if (group < 0) {
        throw std::invalid_argument("negative group id");
    }
    if (layers_.empty()) {
        layers_.emplace_back();
    }
    int slot = static_cast<int>(group_map_.size());
    group_map_.push_back(group);
    layers_.back().rotation_slots.push_back({q, slot});
    return slot;
}

int CircuitBuilder::rx(int q, int group) {
    h(q);
    int slot = rz(q, group);
    h(q);
    return slot;
}

int CircuitBuilder::ry(int q, int group) {
    sdg(q).h(q);
    int slot = rz(q, group);
    h(q).s(q);
    return slot;
}

int CircuitBuilder::rzz(int a, int b, int group) {
    cnot(a, b);
    int slot = rz(b, group);
    cnot(a, b);
    return slot;
}

int CircuitBuilder::rxx(int a, int b, int group) {
    h(a).h(b);
    int slot = rzz(a, b, group);
    h(a).h(b);
    return slot;
}

int CircuitBuilder::ryy(int a, int b, int group) {
    sdg(a).sdg(b).h(a).h(b);
    int slot = rzz(a, b, group);
    h(a).h(b).s(a).s(b);
    return slot;
}

ParamCircuit CircuitBuilder::build() const { return ParamCircuit(qubit_count_, layers_, group_map_, 1); }

namespace {

GateKind parse_clifford(const std::string &name) {
    if (name == "H") return GateKind::H;
    if (name == "S") return GateKind::S;
    if (name == "X") return GateKind::X;
    if (name == "Y") return GateKind::Y;
    if (name == "Z") return GateKind::Z;
    if (name == "CNOT") return GateKind::CNOT;
    throw std::invalid_argument("unsupported gate: " + name);
}

}  // namespace

ParamCircuit build_circuit(int qubit_count, const std::vector<GateSpec> &gates, std::vector<int> group_map) {
    if (qubit_count < 1) {
        throw std::invalid_argument("qubit count must be positive");
    }
    std::vector<Layer> layers;
    int max_slot = -1;
    for (const GateSpec &g : gates) {
        if (g.name == "RZ") {
            if (g.qubits.size() != 1) {
                throw std::invalid_argument("RZ takes one qubit");
            }
            if (g.slot < 0) {
                throw std::invalid_argument("RZ requires a slot id");
            }
            if (layers.empty()) {
                layers.emplace_back();
            }
            for (const Layer &l : layers) {
                for (const RotationSlot &r : l.rotation_slots) {
                    if (r.slot == g.slot) {
                        throw std::invalid_argument("slot collision on slot " + std::to_string(g.slot));
                    }
                }
            }
            layers.back().rotation_slots.push_back({g.qubits[0], g.slot});
            max_slot = std::max(max_slot, g.slot);
            continue;
        }
        GateKind kind = parse_clifford(g.name);
        std::size_t want = kind == GateKind::CNOT ? 2 : 1;
        if (g.qubits.size() != want) {
            throw std::invalid_argument(g.name + " takes " + std::to_string(want) + " qubit(s)");
        }
        if (layers.empty() || !layers.back().rotation_slots.empty()) {
            layers.emplace_back();
        }
        layers.back().clifford_block.push_back({kind, g.qubits[0], want == 2 ? g.qubits[1] : -1});
    }
    if (group_map.empty()) {
        group_map.resize(max_slot + 1);
        for (int s = 0; s <= max_slot; ++s) {
            group_map[s] = s;
        }
    } else if (static_cast<int>(group_map.size()) != max_slot + 1) {
        throw std::invalid_argument("group map does not cover every slot");
    }
    return ParamCircuit(qubit_count, std::move(layers), std::move(group_map), 1);
}

ParamCircuit build_hva(HvaModel model, int n, int l) {
    if (n < 2) {
        throw std::invalid_argument("chain too short");
    }
    if (l < 1) {
        throw std::invalid_argument("layer count must be positive");
    }
    CircuitBuilder b(n);
    for (int q = 0; q < n; ++q) {
        b.h(q);
    }
    // Bonds in brickwork order keep backward light cones narrow.
    std::vector<std::pair<int, int>> bonds;
    for (int parity = 0; parity < 2; ++parity) {
        for (int q = parity; q + 1 < n; q += 2) {
            bonds.emplace_back(q, q + 1);
        }
    }
    for (int layer = 0; layer < l; ++layer) {
        int g0 = 2 * layer;
        int g1 = 2 * layer + 1;
        if (model == HvaModel::tfim) {
            for (auto [a, c] : bonds) {
                b.rzz(a, c, g0);
            }
            for (int q = 0; q < n; ++q) {
                b.rx(q, g1);
            }
        } else {
            for (auto [a, c] : bonds) {
                b.rxx(a, c, g0);
            }
            for (auto [a, c] : bonds) {
                b.ryy(a, c, g1);
            }
        }
    }
    return b.build();
}

ParamCircuit build_ghz_probe(int n) {
    if (n < 1) {
        throw std::invalid_argument("qubit count must be positive");
    }
    CircuitBuilder b(n);
    b.h(0);
    for (int q = 0; q + 1 < n; ++q) {
        b.cnot(q, q + 1);
    }
    for (int q = 0; q < n; ++q) {
        b.rz(q, 0);
    }
    for (int q = 0; q < n; ++q) {
        b.h(q);
    }
    return b.build();
}

ParamCircuit build_hea(int n, int l) {
    if (n < 1 || l < 1) {
        throw std::invalid_argument("qubit and layer counts must be positive");
    }
    CircuitBuilder b(n);
    int group = 0;
    for (int layer = 0; layer < l; ++layer) {
        for (int q = 0; q < n; ++q) {
            b.ry(q, group++);
        }
        for (int q = 0; q < n; ++q) {
            b.rz(q, group++);
        }
        for (int q = 0; q + 1 < n; ++q) {
            b.cnot(q, q + 1);
        }
    }
    return b.build();
}

ParamCircuit fold_circuit(const ParamCircuit &c, int lambda, FoldMode mode) {
    if (lambda < 1) {
        throw std::invalid_argument("invalid fold factor");
    }
    if (c.fold_factor() != 1) {
        throw std::invalid_argument("circuit is already folded");
    }
    if (lambda == 1) {
        return c;
    }
    const int d = c.slot_count();
    const int groups = c.group_count();
    std::vector<Layer> layers;
    std::vector<int> group_map(static_cast<std::size_t>(lambda) * d);
    for (int rep = 0; rep < lambda; ++rep) {
        for (Layer layer : c.layers()) {
            for (RotationSlot &r : layer.rotation_slots) {
                r.slot += rep * d;
            }
            layers.push_back(std::move(layer));
        }
        for (int s = 0; s < d; ++s) {
            int g = c.group_of(s);
            group_map[rep * d + s] = mode == FoldMode::independent ? rep * groups + g : g;
        }
    }
    return ParamCircuit(c.qubit_count(), std::move(layers), std::move(group_map), lambda);
}

}  // namespace szne
