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

#include "szne/device.hpp"

#include <stdexcept>

namespace szne {

namespace {

std::vector<double> with_offsets(std::span<const double> x, const NoiseModel &noise, int level, Rng &rng) {
    std::vector<double> out(x.begin(), x.end());
    if (auto co = noise.coherent()) {
        const std::vector<double> off = sample_coherent_offsets(*co, level, static_cast<int>(out.size()), rng);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += off[i];
        }
    }
    return out;
}

void require_global_only(const NoiseModel &noise) {
    if (noise.has_local_channels() || noise.amplification == Amplification::structural_fold) {
        throw std::invalid_argument("backend supports only global depolarizing and coherent noise");
    }
}

double global_rate(const NoiseModel &noise, int level) {
    return noise.global() ? amplified_rate(noise.global()->p, level) : 0.0;
}

}  // namespace

DensityMatrix QuantumDevice::noisy_density(std::span<const double>, int, Rng &) const {
    throw std::invalid_argument("shadow collection requires dense backend");
}

DenseDevice::DenseDevice(ParamCircuit circuit, Observable observable, NoiseModel noise, FoldMode fold_mode,
                         SimLimits limits)
    : circuit_(std::move(circuit)),
      observable_(std::move(observable)),
      noise_(std::move(noise)),
      fold_mode_(fold_mode),
      limits_(limits) {
    noise_.validate();
    if (circuit_.qubit_count() > limits_.dense_noisy) {
        throw std::invalid_argument("density-matrix backend limited to " + std::to_string(limits_.dense_noisy) +
                                    " qubits");
    }
    if (observable_.max_qubit() >= circuit_.qubit_count()) {
        throw std::invalid_argument("observable acts outside the register");
    }
}

const ParamCircuit &DenseDevice::circuit_at(int level) const {
    if (noise_.amplification != Amplification::structural_fold || level == 1) {
        return circuit_;
    }
    std::lock_guard<std::mutex> lock(fold_mutex_);
    auto &slot = folded_[level];
    if (!slot) {
        slot = std::make_unique<ParamCircuit>(fold_circuit(circuit_, level, fold_mode_));
    }
    return *slot;
}

int DenseDevice::training_dimension(int level) const { return circuit_at(level).group_count(); }

std::vector<double> DenseDevice::expand(std::span<const double> x, int level) const {
    const int want = training_dimension(level);
    if (static_cast<int>(x.size()) == want) {
        return {x.begin(), x.end()};
    }
    if (static_cast<int>(x.size()) == parameter_count() && want % parameter_count() == 0) {
        // Correlated evaluation of an independently folded circuit: repeat the values per block.
        std::vector<double> out;
        out.reserve(want);
        while (static_cast<int>(out.size()) < want) {
            out.insert(out.end(), x.begin(), x.end());
        }
        return out;
    }
    throw std::invalid_argument("input dimension does not match the circuit");
}

DensityMatrix DenseDevice::noisy_density(std::span<const double> x, int level, Rng &rng) const {
    const std::vector<double> full = with_offsets(expand(x, level), noise_, level, rng);
    return noisy_state(circuit_at(level), full, noise_, level, limits_);
}

double DenseDevice::noisy_value(std::span<const double> x, int level, Rng &rng) const {
    return noisy_density(x, level, rng).expectation(observable_);
}

double DenseDevice::ideal_value(std::span<const double> x) const {
    return ideal_expectation(circuit_, x, observable_, limits_);
}

LightconeDevice::LightconeDevice(ParamCircuit circuit, Observable observable, NoiseModel noise, SimLimits limits)
    : circuit_(std::move(circuit)),
      observable_(std::move(observable)),
      noise_(std::move(noise)),
      plan_(circuit_, observable_, limits) {
    noise_.validate();
    require_global_only(noise_);
    if (!observable_.is_traceless()) {
        throw std::invalid_argument("analytic path requires traceless observable");
    }
}

double LightconeDevice::noisy_value(std::span<const double> x, int level, Rng &rng) const {
    const std::vector<double> shifted = with_offsets(x, noise_, level, rng);
    return (1.0 - global_rate(noise_, level)) * plan_.evaluate(shifted);
}

double LightconeDevice::ideal_value(std::span<const double> x) const { return plan_.evaluate(x); }

Observable parity_observable(int n) {
    PauliTerm t{1.0, {}};
    for (int q = 0; q < n; ++q) {
        t.ops.emplace_back(q, Pauli::Z);
    }
    return Observable({t});
}

GhzDevice::GhzDevice(int n, NoiseModel noise) : n_(n), observable_(parity_observable(n)), noise_(std::move(noise)) {
    noise_.validate();
    require_global_only(noise_);
}

double GhzDevice::noisy_value(std::span<const double> x, int level, Rng &rng) const {
    if (x.size() != 1) {
        throw std::invalid_argument("GHZ probe takes a single phase");
    }
    const std::vector<double> shifted = with_offsets(x, noise_, level, rng);
    return ghz_analytic(n_, shifted[0], global_rate(noise_, level));
}

double GhzDevice::ideal_value(std::span<const double> x) const {
    if (x.size() != 1) {
        throw std::invalid_argument("GHZ probe takes a single phase");
    }
    return ghz_analytic(n_, x[0], 0.0);
}

}  // namespace szne
