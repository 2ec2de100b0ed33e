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

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "szne/random.hpp"
#include "szne/states.hpp"

namespace szne {

/// Independent single-qubit depolarizing after every gate, rate chosen by gate arity.
struct LocalDepolarizing {
    double p1 = 0.0;
    double p2 = 0.0;
};

/// (1 - p) rho + p I / 2^N applied once per circuit.
struct GlobalDepolarizing {
    double p = 0.0;
};

/// Thermal relaxation on every touched qubit; times in microseconds.
struct Thermal {
    double t1 = 1.0;
    double t2 = 1.0;
    double gate_time_1q = 0.0;
    double gate_time_2q = 0.0;
    double excited_population = 0.0;
};

/// Angle miscalibration: one offset per parameter group, uniform in [low, high] scaled by the level.
struct Coherent {
    double low = 0.0;
    double high = 0.0;
};

using NoiseComponent = std::variant<LocalDepolarizing, GlobalDepolarizing, Thermal, Coherent>;

enum class Amplification { rate_formula, channel_repetition, structural_fold };

/// Declarative noise specification. A single-entry component list is a plain model,
/// several entries form a composite applied in listed order after each gate.
struct NoiseModel {
    std::vector<NoiseComponent> components;
    Amplification amplification = Amplification::rate_formula;

    static NoiseModel none() { return {}; }
    static NoiseModel global_depolarizing(double p);

    void validate() const;
    bool has_local_channels() const;
    std::optional<GlobalDepolarizing> global() const;
    std::optional<Coherent> coherent() const;
};

/// Kraus operators on the channel's support.
struct KrausChannel {
    std::vector<Eigen::MatrixXcd> operators;

    /// Largest entry of sum K^dagger K - I.
    double completeness_error() const;
};

/// Per-qubit channel attached after a gate of the given arity (applied to each qubit the gate
/// touches). Global and coherent components contribute the identity here.
KrausChannel make_channel(const NoiseModel &noise, int gate_arity);

KrausChannel depolarizing_channel(double p);
KrausChannel thermal_channel(const Thermal &t, double gate_time);
/// Choi matrix of thermal relaxation with the input factor first: sum |i><j| (x) E(|i><j|).
Eigen::Matrix4cd thermal_choi(const Thermal &t, double gate_time);
KrausChannel kraus_from_choi(const Eigen::Matrix4cd &choi, double cutoff = 1e-12);
Eigen::Matrix4cd choi_of(const KrausChannel &k);

Superop superop_of(const KrausChannel &k);

/// Diagonal (q_X, q_Y, q_Z) of the Pauli transfer matrix of a Pauli channel.
std::array<double, 3> ptm_diagonal(double p_x, double p_y, double p_z);

double amplified_rate(double p, int lambda);

std::vector<double> sample_coherent_offsets(const Coherent &bounds, int lambda, int group_count, Rng &rng);

}  // namespace szne
