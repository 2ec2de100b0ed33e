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
#include <complex>
#include <cstdint>
#include <vector>

#include "szne/circuit.hpp"
#include "szne/observable.hpp"

namespace szne {

using cplx = std::complex<double>;

/// Row-major 4x4 superoperator acting on the (row bit, column bit) pair of one qubit,
/// indexed as 2 * row_bit + column_bit.
using Superop = std::array<cplx, 16>;

Superop superop_identity();
Superop superop_compose(const Superop &after, const Superop &before);
Superop superop_power(const Superop &s, int k);
Superop superop_of_gate(GateKind kind);
Superop superop_of_rz(double theta);

/// Bit masks and phase data for applying a Pauli string to basis states.
struct PauliAction {
    std::uint64_t flip = 0;
    std::uint64_t sign = 0;
    int y_count = 0;

    explicit PauliAction(const PauliTerm &t);
    /// Phase of P|i> = phase(i) |i ^ flip>.
    cplx phase(std::uint64_t i) const;
};

/// Pure state on N qubits; qubit q is bit q of the basis index.
class StateVector {
  public:
    explicit StateVector(int n);

    int qubit_count() const { return n_; }
    const std::vector<cplx> &amplitudes() const { return amps_; }
    std::vector<cplx> &amplitudes() { return amps_; }

    void apply(GateKind kind, int q0, int q1 = -1);
    void apply_rz(int q, double theta);
    double expectation(const PauliTerm &t) const;
    double expectation(const Observable &o) const;
    double norm_squared() const;

  private:
    int n_;
    std::vector<cplx> amps_;
};

/// Mixed state on N qubits stored as a dense row-major matrix.
class DensityMatrix {
  public:
    explicit DensityMatrix(int n);

    int qubit_count() const { return n_; }
    std::size_t dim() const { return dim_; }
    const std::vector<cplx> &data() const { return rho_; }
    cplx at(std::size_t r, std::size_t c) const { return rho_[r * dim_ + c]; }

    void apply(const Superop &s, int q);
    void apply_cnot(int control, int target);
    void apply_global_depolarizing(double p);

    double expectation(const PauliTerm &t) const;
    double expectation(const Observable &o) const;
    double trace() const;
    /// Largest |rho - rho^dagger| entry.
    double hermiticity_error() const;

    /// Expectation of every Pauli string, indexed by sum over q of code_q * 4^q with codes I=0, X=1, Y=2, Z=3.
    std::vector<double> pauli_expectations() const;

  private:
    int n_;
    std::size_t dim_;
    std::vector<cplx> rho_;
};

}  // namespace szne
