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
#include <memory>
#include <vector>

#include "szne/config.hpp"
#include "szne/device.hpp"
#include "szne/ledger.hpp"
#include "szne/mitigation.hpp"

namespace szne {

// ---- Residual statistics ----

/// Mean squared residual, mean residual, and a Gaussian kernel density curve with Scott's bandwidth.
/// Residual sets without spread produce a single grid point at the mean with bandwidth 0.
struct ResidualReport {
    std::size_t count = 0;
    double mse = 0.0;
    double mean = 0.0;
    double bandwidth = 0.0;
    std::vector<double> grid;
    std::vector<double> density;
};

ResidualReport residual_report(const std::vector<double> &residuals, int grid_points = 201);
/// Throws "cannot compute residuals" if any run lacks an ideal reference.
ResidualReport residual_report(const std::vector<MitigationRun> &runs, int grid_points = 201);
double mean_squared_residual(const std::vector<MitigationRun> &runs);

// ---- Task construction ----

ParamCircuit make_circuit(const ExperimentConfig &config);
/// Parity Z^N for the GHZ probe, otherwise the configured Hamiltonian on the circuit's register.
Observable make_observable(const ExperimentConfig &config);
/// Analytic GHZ backend, light-cone backend for global-only noise, density-matrix backend otherwise.
std::unique_ptr<QuantumDevice> make_device(const ExperimentConfig &config);
SurrogateSettings make_surrogate_settings(const ExperimentConfig &config, std::uint64_t seed);
/// Test inputs per the input settings; filtering by |ideal| uses `device`.
std::vector<std::vector<double>> make_test_inputs(const ExperimentConfig &config, const QuantumDevice &device,
                                                  std::uint64_t seed);
std::vector<std::vector<double>> make_uniform_inputs(int count, int dimension, double radius, std::uint64_t seed);

/// Sub-stream seeds of one experiment.
enum class Stream : std::uint64_t { training = 1, validation, inference, unmitigated, test_inputs, dictionary, init };
std::uint64_t stream_seed(std::uint64_t master, Stream s);

// ---- Sweeps over inputs; input i uses the stream derive_seed(seed, {i}) ----

std::vector<MitigationRun> unmitigated_sweep(const QuantumDevice &device, const std::vector<std::vector<double>> &inputs,
                                             std::int64_t shots, std::uint64_t seed, MeasurementLedger &ledger,
                                             int threads = 1);
std::vector<MitigationRun> zne_sweep(const QuantumDevice &device, const std::vector<std::vector<double>> &inputs,
                                     const ExtrapolationScheme &scheme, std::int64_t shots, std::uint64_t seed,
                                     MeasurementLedger &ledger, int threads = 1);
std::vector<MitigationRun> szne_sweep(const std::vector<Surrogate> &surrogates, const QuantumDevice &device,
                                      const std::vector<std::vector<double>> &inputs,
                                      const ExtrapolationScheme &scheme, int threads = 1);
std::vector<MitigationRun> hybrid_sweep(const std::vector<Surrogate> &surrogates, const std::vector<int> &selected,
                                        const QuantumDevice &device, const std::vector<std::vector<double>> &inputs,
                                        const ExtrapolationScheme &scheme, std::int64_t shots, std::uint64_t seed,
                                        MeasurementLedger &ledger, int threads = 1);
/// Runs holding only the level-1 entry of each ZNE run, scored against the same ideal.
std::vector<MitigationRun> unmitigated_from_zne(const std::vector<MitigationRun> &zne_runs);

/// Collects training data on `device` and fits one surrogate per configured level.
struct TrainedSurrogates {
    std::vector<Dataset> datasets;
    std::vector<Surrogate> surrogates;
};
TrainedSurrogates collect_and_train(const ExperimentConfig &config, const QuantumDevice &device,
                                    MeasurementLedger &ledger, std::uint64_t seed);

// ---- Studies ----

struct MetrologyResult {
    std::vector<std::vector<double>> inputs;
    std::vector<MitigationRun> unmitigated;
    std::vector<MitigationRun> zne;
    std::vector<MitigationRun> szne;
    LedgerSnapshot zne_cost;
    LedgerSnapshot szne_cost;
    double mse_unmitigated = 0.0;
    double mse_zne = 0.0;
    double mse_szne = 0.0;
};
/// Unmitigated (the level-1 entries of ZNE), conventional ZNE and S-ZNE over the test grid.
MetrologyResult metrology_sweep(const ExperimentConfig &config);

struct DataEfficiencyResult {
    std::vector<std::int64_t> sizes;
    std::vector<int> levels;
    /// mse[i][j]: surrogate test MSE for sizes[i] at levels[j], averaged over repeats.
    std::vector<std::vector<double>> mse;
};
/// Surrogate prediction MSE against exact noisy values on the test inputs, per training-set size.
DataEfficiencyResult data_efficiency_study(const ExperimentConfig &config);

struct HybridResult {
    std::vector<Surrogate> surrogates;
    ValidationReport validation;
    std::vector<std::vector<double>> inputs;
    std::vector<MitigationRun> zne;
    std::vector<MitigationRun> hybrid;
    LedgerSnapshot zne_cost;
    /// Training, validation and inference of the hybrid pipeline.
    LedgerSnapshot hybrid_cost;
    double mse_zne = 0.0;
    double mse_hybrid = 0.0;
};
/// Trains surrogates, selects surrogate levels on a validation set, then compares hybrid and
/// conventional ZNE on the test inputs under shared measurement streams.
HybridResult hybrid_study(const ExperimentConfig &config);

struct VqaStep {
    int iteration = 0;
    std::vector<double> x;
    double energy = 0.0;
};
struct VqaResult {
    std::vector<VqaStep> trajectory;
    std::vector<double> final_x;
    /// Estimator value at final_x.
    double final_energy = 0.0;
    /// Noiseless energy at final_x.
    double final_ideal_energy = 0.0;
    LedgerSnapshot cost;
};
/// Gradient descent on the estimator value divided by the norm bound B: each iteration evaluates the
/// estimator at x and at x +- fd_step along every coordinate. S-ZNE uses `surrogates`; the other
/// estimators measure on `device`. Throws "estimator inconsistency" when an estimate falls below -B.
VqaResult vqa_optimize(const ExperimentConfig &config, const QuantumDevice &device,
                       const std::vector<Surrogate> &surrogates, MeasurementLedger &ledger);
/// Builds the device, trains surrogates for the S-ZNE estimator, and optimizes.
VqaResult vqa_optimize(const ExperimentConfig &config);

}  // namespace szne
