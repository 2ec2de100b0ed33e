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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "szne/device.hpp"
#include "szne/estimation.hpp"
#include "szne/extrapolation.hpp"
#include "szne/ledger.hpp"
#include "szne/random.hpp"
#include "szne/surrogates.hpp"

namespace szne {

enum class EntryTag { measured, predicted };

const char *entry_tag_name(EntryTag t);

struct MitigationRun {
    std::vector<double> x;
    std::vector<int> levels;
    std::vector<double> z;
    std::vector<EntryTag> tags;
    double estimate = 0.0;
    std::optional<double> ideal;
    std::optional<double> residual;
    LedgerSnapshot cost;

    void set_ideal(double value) {
        ideal = value;
        residual = estimate - value;
    }
};

/// M-shot estimate of one circuit instance at `level`, booked on `ledger` under `phase`.
ShotEstimate measure(const QuantumDevice &device, std::span<const double> x, int level, std::int64_t shots, Rng &rng,
                     MeasurementLedger &ledger, Phase phase);

/// Measures every level with M shots and extrapolates; books u * M inference shots.
MitigationRun run_conventional_zne(const QuantumDevice &device, std::span<const double> x,
                                   const ExtrapolationScheme &scheme, std::int64_t shots, Rng &rng,
                                   MeasurementLedger &ledger);

enum class LabelMode { shots, shadows };

struct DataRecord {
    std::vector<double> x;
    double y = 0.0;
    int level = 1;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    bool operator==(const DataRecord &) const = default;
};

struct Dataset {
    int level = 1;
    LabelMode mode = LabelMode::shots;
    std::vector<DataRecord> records;
};

/// Draws one training input of the given dimension.
using InputSampler = std::function<std::vector<double>(int dimension, Rng &rng)>;

/// Uniform over [-radius, radius]^dimension.
InputSampler uniform_sampler(double radius);

struct CollectionOptions {
    LabelMode mode = LabelMode::shots;
    InputSampler sampler;
    int threads = 1;
};

/// n records per level with labels from `budget` shots or snapshots; record i at level j uses the
/// stream derive_seed(master_seed, {level, i}), so results do not depend on the thread count.
/// Books sum_j n * budget training measurements.
std::vector<Dataset> build_training_datasets(const QuantumDevice &device, const std::vector<int> &levels,
                                             std::int64_t n, std::int64_t budget, std::uint64_t master_seed,
                                             MeasurementLedger &ledger, const CollectionOptions &options = {});

enum class SurrogateKind { ridge, kernel };

struct SurrogateSettings {
    SurrogateKind kind = SurrogateKind::ridge;
    /// Feature dictionary for ridge fits (shared across levels).
    FeatureDictionary dictionary;
    double gamma = 1e-6;
    /// Frequency truncation for kernel fits.
    int truncation = 2;
    std::size_t materialize_cap = 200000;
};

std::vector<Surrogate> train_surrogates(const std::vector<Dataset> &datasets, const SurrogateSettings &settings,
                                        std::uint64_t seed = 0, int threads = 1);

/// Surrogate for `level`, or nullptr.
const Surrogate *find_surrogate(const std::vector<Surrogate> &surrogates, int level);

/// Surrogate prediction at x; inputs shorter than the surrogate's dimension are tiled, which evaluates
/// an independently folded surrogate on correlated inputs.
double predict_at(const Surrogate &s, std::span<const double> x);

/// Purely classical: every entry predicted, no ledger involvement.
MitigationRun run_szne(const std::vector<Surrogate> &surrogates, std::span<const double> x,
                       const ExtrapolationScheme &scheme);

struct ValidationReport {
    std::vector<int> levels;
    std::vector<double> mse;
    std::vector<int> selected;
};

/// Per-level MSE of the surrogates against M_val-shot measurements on the validation inputs, and the
/// set of levels with MSE <= eta. Books |inputs| * u * M_val validation shots.
ValidationReport validate_and_select(const std::vector<Surrogate> &surrogates, const QuantumDevice &device,
                                     const std::vector<std::vector<double>> &inputs, const std::vector<int> &levels,
                                     std::int64_t validation_shots, double eta, std::uint64_t master_seed,
                                     MeasurementLedger &ledger, int threads = 1);

/// Measures levels outside `selected` and predicts the rest; books (u - |selected|) * M inference shots.
MitigationRun run_hybrid(const std::vector<Surrogate> &surrogates, const std::vector<int> &selected,
                         const QuantumDevice &device, std::span<const double> x, const ExtrapolationScheme &scheme,
                         std::int64_t shots, Rng &rng, MeasurementLedger &ledger);

}  // namespace szne
