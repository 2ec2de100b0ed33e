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
#include <vector>

#include "szne/circuit.hpp"
#include "szne/noise.hpp"
#include "szne/observable.hpp"
#include "szne/random.hpp"
#include "szne/simulator.hpp"
#include "szne/states.hpp"

namespace szne {

struct ShotEstimate {
    double value = 0.0;
    std::int64_t shots = 0;
    double norm_bound = 0.0;
};

/// Finite-shot estimate with l1 importance sampling over observable terms. Every shot picks term i
/// with probability |c_i| / B and reports B sign(c_i) times a +-1 outcome of mean <P_i>, so the shot
/// values are +-B with P(+B) = (1 + mu / B) / 2; the sum is drawn from that binomial directly.
/// `term_expectations[i]` is <P_i> for the i-th term of `o`.
ShotEstimate estimate_with_shots(std::span<const double> term_expectations, const Observable &o, std::int64_t shots,
                                 Rng &rng);

/// Same estimator parametrized by the exact mean mu = sum_i c_i <P_i> and the norm bound B.
ShotEstimate estimate_from_mean(double mean, double norm_bound, std::int64_t shots, Rng &rng);

/// Randomized single-qubit Pauli measurements. Basis codes follow Pauli (X=1, Y=2, Z=3);
/// outcomes are +1 or -1. Snapshot t, qubit q lives at index t * qubit_count + q.
struct ShadowSet {
    int qubit_count = 0;
    int level = 1;
    std::vector<std::uint8_t> bases;
    std::vector<std::int8_t> outcomes;

    std::int64_t count() const {
        return qubit_count == 0 ? 0 : static_cast<std::int64_t>(bases.size()) / qubit_count;
    }
};

ShadowSet collect_shadows(const DensityMatrix &rho, std::int64_t snapshots, Rng &rng);

ShadowSet collect_shadows(const ParamCircuit &c, std::span<const double> x, const NoiseModel &noise, int lambda,
                          std::int64_t snapshots, Rng &rng, const SimLimits &limits = {});

/// Plain-mean Pauli shadow estimate of Tr(rho O).
double estimate_from_shadows(const ShadowSet &s, const Observable &o);

}  // namespace szne
