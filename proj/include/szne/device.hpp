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

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "szne/circuit.hpp"
#include "szne/noise.hpp"
#include "szne/observable.hpp"
#include "szne/random.hpp"
#include "szne/simulator.hpp"

namespace szne {

/// Exact expectation values of one circuit family and observable under a noise model.
/// Each noisy call represents one circuit instance: coherent offsets are drawn from `rng`.
class QuantumDevice {
  public:
    virtual ~QuantumDevice() = default;

    virtual int parameter_count() const = 0;
    virtual const Observable &observable() const = 0;
    virtual double noisy_value(std::span<const double> x, int level, Rng &rng) const = 0;
    virtual double ideal_value(std::span<const double> x) const = 0;

    virtual bool supports_shadows() const { return false; }
    virtual DensityMatrix noisy_density(std::span<const double> x, int level, Rng &rng) const;

    /// Input dimension of training data at `level`; larger than parameter_count() only for
    /// structural folding with independent slots.
    virtual int training_dimension(int level) const {
        (void)level;
        return parameter_count();
    }
};

/// Density-matrix backend for small registers.
class DenseDevice : public QuantumDevice {
  public:
    DenseDevice(ParamCircuit circuit, Observable observable, NoiseModel noise,
                FoldMode fold_mode = FoldMode::correlated, SimLimits limits = {});

    int parameter_count() const override { return circuit_.group_count(); }
    const Observable &observable() const override { return observable_; }
    double noisy_value(std::span<const double> x, int level, Rng &rng) const override;
    double ideal_value(std::span<const double> x) const override;
    bool supports_shadows() const override { return true; }
    DensityMatrix noisy_density(std::span<const double> x, int level, Rng &rng) const override;
    int training_dimension(int level) const override;

    const ParamCircuit &circuit() const { return circuit_; }
    const NoiseModel &noise() const { return noise_; }

  private:
    const ParamCircuit &circuit_at(int level) const;
    std::vector<double> expand(std::span<const double> x, int level) const;

    ParamCircuit circuit_;
    Observable observable_;
    NoiseModel noise_;
    FoldMode fold_mode_;
    SimLimits limits_;
    mutable std::mutex fold_mutex_;
    mutable std::map<int, std::unique_ptr<ParamCircuit>> folded_;
};

/// Light-cone ideal values scaled by (1 - p_eff) for global depolarizing noise.
class LightconeDevice : public QuantumDevice {
  public:
    LightconeDevice(ParamCircuit circuit, Observable observable, NoiseModel noise, SimLimits limits = {});

    int parameter_count() const override { return circuit_.group_count(); }
    const Observable &observable() const override { return observable_; }
    double noisy_value(std::span<const double> x, int level, Rng &rng) const override;
    double ideal_value(std::span<const double> x) const override;

  private:
    ParamCircuit circuit_;
    Observable observable_;
    NoiseModel noise_;
    LightconePlan plan_;
};

/// GHZ probe read out with X^N after the Hadamard layer, i.e. Z^N: signal (1 - p_eff) cos(N x).
class GhzDevice : public QuantumDevice {
  public:
    GhzDevice(int n, NoiseModel noise);

    int parameter_count() const override { return 1; }
    const Observable &observable() const override { return observable_; }
    double noisy_value(std::span<const double> x, int level, Rng &rng) const override;
    double ideal_value(std::span<const double> x) const override;
    int qubit_count() const { return n_; }

  private:
    int n_;
    Observable observable_;
    NoiseModel noise_;
};

/// Z on every qubit of an N-qubit register.
Observable parity_observable(int n);

}  // namespace szne
