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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace szne {

enum class GateKind : std::uint8_t { H, S, X, Y, Z, CNOT };

const char *gate_name(GateKind kind);

/// A Clifford gate. For CNOT, `q0` is the control and `q1` the target.
struct Gate {
    GateKind kind;
    int q0;
    int q1 = -1;

    int arity() const { return kind == GateKind::CNOT ? 2 : 1; }
    bool operator==(const Gate &) const = default;
};

/// An RZ rotation whose angle is the value assigned to `slot`'s group.
struct RotationSlot {
    int qubit;
    int slot;
    bool operator==(const RotationSlot &) const = default;
};

/// Clifford gates followed by a set of parametrized RZ rotations.
struct Layer {
    std::vector<Gate> clifford_block;
    std::vector<RotationSlot> rotation_slots;
    bool operator==(const Layer &) const = default;
};

/// A gate-list entry accepted by build_circuit. RZ entries carry `slot`.
struct GateSpec {
    std::string name;
    std::vector<int> qubits;
    int slot = -1;
};

enum class FoldMode { independent, correlated };

/// Immutable Clifford + RZ circuit with parameter slots grouped into shared values.
class ParamCircuit {
  public:
    ParamCircuit(int qubit_count, std::vector<Layer> layers, std::vector<int> group_map, int fold_factor = 1);

    int qubit_count() const { return qubit_count_; }
    const std::vector<Layer> &layers() const { return layers_; }
    int slot_count() const { return static_cast<int>(group_map_.size()); }
    int group_count() const { return group_count_; }
    int group_of(int slot) const { return group_map_.at(slot); }
    const std::vector<int> &group_map() const { return group_map_; }
    int fold_factor() const { return fold_factor_; }
    std::vector<int> group_sizes() const;
    std::size_t gate_count() const;

    /// Expands per-group values into per-slot angles.
    std::vector<double> slot_angles(std::span<const double> group_values) const;

    bool operator==(const ParamCircuit &) const = default;

  private:
    int qubit_count_;
    std::vector<Layer> layers_;
    std::vector<int> group_map_;
    int group_count_;
    int fold_factor_;
};

/// One primitive operation in time order; `slot` >= 0 marks an RZ rotation.
struct Op {
    GateKind kind;
    int q0;
    int q1;
    int slot;

    bool is_rotation() const { return slot >= 0; }
    int arity() const { return (slot < 0 && kind == GateKind::CNOT) ? 2 : 1; }
};

std::vector<Op> flatten(const ParamCircuit &c);

/// Incremental construction helper. Rotations opened after Clifford gates start a new layer.
class CircuitBuilder {
  public:
    explicit CircuitBuilder(int qubit_count);

    CircuitBuilder &gate(GateKind kind, int q0, int q1 = -1);
    CircuitBuilder &h(int q) { return gate(GateKind::H, q); }
    CircuitBuilder &s(int q) { return gate(GateKind::S, q); }
    CircuitBuilder &x(int q) { return gate(GateKind::X, q); }
    CircuitBuilder &y(int q) { return gate(GateKind::Y, q); }
    CircuitBuilder &z(int q) { return gate(GateKind::Z, q); }
    CircuitBuilder &cnot(int c, int t) { return gate(GateKind::CNOT, c, t); }
    CircuitBuilder &sdg(int q) { return z(q).s(q); }

    /// Appends RZ on qubit q bound to a fresh slot in `group`; returns the slot id.
    int rz(int q, int group);
    /// exp(-i a Z/2)-style rotations of other axes, compiled into Clifford-conjugated RZ.
    int rx(int q, int group);
    int ry(int q, int group);
    /// exp(-i a PP/2) on a pair for P in {X, Y, Z}, compiled through CNOT-RZ-CNOT.
    int rzz(int a, int b, int group);
    int rxx(int a, int b, int group);
    int ryy(int a, int b, int group);

    ParamCircuit build() const;

  private:
    void check_qubit(int q) const;
    int qubit_count_;
    std::vector<Layer> layers_;
    std::vector<int> group_map_;
};

/// Builds a circuit from a gate list over {H, S, CNOT, X, Y, Z, RZ}.
/// `group_map` defaults to one group per slot.
ParamCircuit build_circuit(int qubit_count, const std::vector<GateSpec> &gates, std::vector<int> group_map = {});

enum class HvaModel { tfim, heisenberg };

/// H on every qubit followed by l repetitions of two grouped rotation blocks on an open chain.
ParamCircuit build_hva(HvaModel model, int n, int l);

/// GHZ preparation, one shared RZ phase per qubit, and a final Hadamard layer.
ParamCircuit build_ghz_probe(int n);

/// Hardware-efficient ansatz: per layer RY and RZ on every qubit (independent groups), then a CNOT ladder.
ParamCircuit build_hea(int n, int l);

ParamCircuit fold_circuit(const ParamCircuit &c, int lambda, FoldMode mode);

}  // namespace szne
