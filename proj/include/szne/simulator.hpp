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

#include <span>
#include <vector>

#include "szne/circuit.hpp"
#include "szne/noise.hpp"
#include "szne/observable.hpp"
#include "szne/states.hpp"

namespace szne {

struct SimLimits {
    int dense_ideal = 20;
    int dense_noisy = 10;
};

/// Runs the circuit on |0...0> with the given per-group values.
StateVector simulate_state(const ParamCircuit &c, std::span<const double> x);

/// Tr(rho(x) O) from the dense statevector.
double ideal_expectation(const ParamCircuit &c, std::span<const double> x, const Observable &o,
                         const SimLimits &limits = {});

/// Density matrix after the noisy circuit at level lambda. Local channels follow every gate on each
/// touched qubit; global depolarizing is applied once at the end. Coherent components are not applied
/// here: callers add sampled offsets to x beforehand.
DensityMatrix noisy_state(const ParamCircuit &c, std::span<const double> x, const NoiseModel &noise, int lambda,
                          const SimLimits &limits = {});

/// Tr(N_lambda(rho(x)) O). Global-only noise with a traceless observable takes the analytic route
/// (1 - p_eff) * ideal, which also covers registers beyond the density-matrix limit.
double noisy_expectation(const ParamCircuit &c, std::span<const double> x, const Observable &o,
                         const NoiseModel &noise, int lambda, const SimLimits &limits = {});

/// Precomputed backward light cones of every observable term.
class LightconePlan {
  public:
    LightconePlan(const ParamCircuit &c, const Observable &o, const SimLimits &limits = {});

    double evaluate(std::span<const double> x) const;
    int widest_cone() const;

  private:
    struct Cone {
        std::vector<int> qubits;
        std::vector<Op> ops;
        PauliTerm term;
    };
    ParamCircuit circuit_;
    std::vector<Cone> cones_;
    double constant_ = 0.0;
};

double lightcone_expectation(const ParamCircuit &c, std::span<const double> x, const Observable &o,
                             const SimLimits &limits = {});

/// (1 - p_eff) cos(N x): the GHZ probe signal under global depolarizing.
double ghz_analytic(int n, double x, double p_eff);

}  // namespace szne
