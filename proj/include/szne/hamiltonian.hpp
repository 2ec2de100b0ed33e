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

#include <string>

#include "szne/observable.hpp"

namespace szne {

enum class HamiltonianModel { tfim, heisenberg };

const char *hamiltonian_model_name(HamiltonianModel m);
HamiltonianModel parse_hamiltonian_model(const std::string &name);

struct Couplings {
    double j = 0.1;
    double h = 0.5;
    double jx = 0.1;
    double jy = 0.5;
    double jz = 0.0;
};

/// Open-chain spin Hamiltonian with its model metadata.
struct Hamiltonian {
    HamiltonianModel model = HamiltonianModel::tfim;
    int n = 0;
    Couplings couplings;
    Observable observable;
};

/// TFIM: -J sum Z_i Z_{i+1} - h sum X_i. Heisenberg: sum Jx X_i X_{i+1} + Jy Y_i Y_{i+1} + Jz Z_i Z_{i+1},
/// omitting couplings equal to zero.
Hamiltonian build_hamiltonian(HamiltonianModel model, int n, const Couplings &couplings);

/// Largest register handled by full diagonalization and by the Lanczos solver.
inline constexpr int kDenseSolverLimit = 10;
inline constexpr int kLanczosSolverLimit = 14;

/// Lowest eigenvalue of a Pauli-sum operator: dense diagonalization up to kDenseSolverLimit qubits,
/// Lanczos up to kLanczosSolverLimit.
double dense_ground_energy(const Observable &o, int n);
double lanczos_ground_energy(const Observable &o, int n);

/// TFIM ground energy from the free-fermion quadratic form, any chain length.
double tfim_free_fermion_energy(int n, double j, double h);

/// Free-fermion route for TFIM; otherwise the sparse solvers within their limits.
double exact_ground_energy(const Hamiltonian &h);

}  // namespace szne
