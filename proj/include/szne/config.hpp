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
#include <string>
#include <vector>

#include "szne/extrapolation.hpp"
#include "szne/hamiltonian.hpp"
#include "szne/mitigation.hpp"
#include "szne/noise.hpp"
#include "szne/surrogates.hpp"

namespace szne {

enum class CircuitFamily { ghz, hva, hea };
/// Expectation-value backend; `automatic` picks analytic, light-cone or dense by family and noise.
enum class Backend { automatic, dense, lightcone, analytic };
enum class VqaEstimator { unmitigated, zne, szne };

const char *circuit_family_name(CircuitFamily f);
const char *vqa_estimator_name(VqaEstimator e);
const char *backend_name(Backend b);
VqaEstimator parse_vqa_estimator(const std::string &name);

struct CircuitConfig {
    CircuitFamily family = CircuitFamily::ghz;
    int n = 100;
    int layers = 1;
    Backend backend = Backend::automatic;
};

struct ShotConfig {
    /// M: shots per measured level at inference.
    std::int64_t inference = 20000;
    /// T: shots or snapshots per training label.
    std::int64_t training = 20000;
    /// M_val: shots per validation label.
    std::int64_t validation = 40000;
};

struct SurrogateConfig {
    SurrogateKind kind = SurrogateKind::ridge;
    DictionaryMode dictionary = DictionaryMode::grouped_harmonic;
    int truncation = 2;
    double gamma = 1e-6;
    /// n_j: training inputs per level.
    std::int64_t samples = 100;
    /// Enumerate the frequency set up to this size, otherwise subsample `feature_samples` members.
    std::size_t feature_cap = 200000;
    std::size_t feature_samples = 2000;
};

struct InputConfig {
    /// Training inputs are uniform over [-radius, radius]^d.
    double radius = 3.141592653589793;
    int test_count = 500;
    /// Test inputs: an evenly spaced grid over [grid_low, grid_high] for single-parameter circuits when
    /// grid_high > grid_low, otherwise uniform draws.
    double grid_low = 0.0;
    double grid_high = 0.0;
    /// Keep only test inputs with |ideal| above this value.
    double min_abs_ideal = 0.0;
};

struct HybridConfig {
    double eta = 0.1;
    int validation_count = 500;
};

struct OptimizerConfig {
    VqaEstimator estimator = VqaEstimator::szne;
    int iterations = 1500;
    double learning_rate = 0.1;
    double fd_step = 0.01;
    double init_radius = 0.1;
};

struct DataEfficiencyConfig {
    std::vector<std::int64_t> sizes = {4, 8, 16, 32};
    int repeats = 10;
};

/// Declarative description of one experiment; every run is reproducible from it.
struct ExperimentConfig {
    std::string task = "metrology";
    CircuitConfig circuit;
    HamiltonianModel model = HamiltonianModel::tfim;
    Couplings couplings;
    NoiseModel noise;
    std::vector<int> levels = {1, 2, 3, 4, 5};
    ExtrapolationKind extrapolation = ExtrapolationKind::linear;
    ShotConfig shots;
    SurrogateConfig surrogate;
    InputConfig inputs;
    HybridConfig hybrid;
    OptimizerConfig optimizer;
    DataEfficiencyConfig data_efficiency;
    std::uint64_t seed = 1;
    int repeats = 1;
    int threads = 1;
    std::string output_dir = "out";
};

/// Parses a JSON document; unknown keys and invalid values are rejected.
ExperimentConfig parse_config(const std::string &json_text);
ExperimentConfig load_config(const std::string &path);
std::string config_to_json(const ExperimentConfig &config);

}  // namespace szne
