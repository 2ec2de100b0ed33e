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

#include "szne/mitigation.hpp"

#include <algorithm>
#include <stdexcept>

#include "szne/parallel.hpp"

namespace szne {

const char *entry_tag_name(EntryTag t) { return t == EntryTag::measured ? "measured" : "predicted"; }

ShotEstimate measure(const QuantumDevice &device, std::span<const double> x, int level, std::int64_t shots, Rng &rng,
                     MeasurementLedger &ledger, Phase phase) {
    if (shots < 1) {
        throw std::invalid_argument("invalid shot count");
    }
    const double mean = device.noisy_value(x, level, rng);
    ShotEstimate e = estimate_from_mean(mean, device.observable().norm_bound(), shots, rng);
    ledger.add(phase, static_cast<std::uint64_t>(shots));
    return e;
}

MitigationRun run_conventional_zne(const QuantumDevice &device, std::span<const double> x,
                                   const ExtrapolationScheme &scheme, std::int64_t shots, Rng &rng,
                                   MeasurementLedger &ledger) {
    return run_hybrid({}, {}, device, x, scheme, shots, rng, ledger);
}

InputSampler uniform_sampler(double radius) {
    if (!(radius > 0.0)) {
        throw std::invalid_argument("sampling radius must be positive");
    }
    return [radius](int dimension, Rng &rng) {
        std::vector<double> x(dimension);
        std::uniform_real_distribution<double> dist(-radius, radius);
        for (double &v : x) {
            v = dist(rng);
        }
        return x;
    };
}

std::vector<Dataset> build_training_datasets(const QuantumDevice &device, const std::vector<int> &levels,
                                             std::int64_t n, std::int64_t budget, std::uint64_t master_seed,
                                             MeasurementLedger &ledger, const CollectionOptions &options) {
    if (n < 1) {
        throw std::invalid_argument("empty budget: at least one training input per level required");
    }
    if (budget < 1) {
        throw std::invalid_argument("empty budget: label budget must be positive");
    }
    if (levels.empty()) {
        throw std::invalid_argument("no noise levels given");
    }
    if (options.mode == LabelMode::shadows && !device.supports_shadows()) {
        throw std::invalid_argument("shadow collection requires dense backend");
    }
    const InputSampler sampler = options.sampler ? options.sampler : uniform_sampler(3.141592653589793);
    std::vector<Dataset> out(levels.size());
    for (std::size_t j = 0; j < levels.size(); ++j) {
        out[j].level = levels[j];
        out[j].mode = options.mode;
        out[j].records.resize(static_cast<std::size_t>(n));
    }
    const std::size_t total = levels.size() * static_cast<std::size_t>(n);
    parallel_for(total, options.threads, [&](std::size_t k) {
        const std::size_t j = k / static_cast<std::size_t>(n);
        const std::size_t i = k % static_cast<std::size_t>(n);
        const int level = levels[j];
        DataRecord &r = out[j].records[i];
        r.level = level;
        r.shots = budget;
        r.seed = derive_seed(master_seed, {static_cast<std::uint64_t>(level), i});
        Rng rng(r.seed);
        r.x = sampler(device.training_dimension(level), rng);
        if (options.mode == LabelMode::shots) {
            r.y = measure(device, r.x, level, budget, rng, ledger, Phase::training).value;
        } else {
            const ShadowSet s = collect_shadows(device.noisy_density(r.x, level, rng), budget, rng);
            r.y = estimate_from_shadows(s, device.observable());
            ledger.add(Phase::training, static_cast<std::uint64_t>(budget));
        }
    });
    return out;
}

std::vector<Surrogate> train_surrogates(const std::vector<Dataset> &datasets, const SurrogateSettings &settings,
                                        std::uint64_t seed, int threads) {
    std::vector<Surrogate> out(datasets.size());
    parallel_for(datasets.size(), threads, [&](std::size_t j) {
        const Dataset &ds = datasets[j];
        if (ds.records.empty()) {
            throw std::invalid_argument("empty training set");
        }
        std::vector<std::vector<double>> xs;
        std::vector<double> ys;
        for (const DataRecord &r : ds.records) {
            xs.push_back(r.x);
            ys.push_back(r.y);
        }
        Surrogate s = settings.kind == SurrogateKind::ridge
                          ? fit_ridge_surrogate(xs, ys, settings.dictionary, settings.gamma, ds.level)
                          : fit_kernel_surrogate(xs, ys, settings.truncation, ds.level, settings.materialize_cap);
        s.info.samples = static_cast<std::int64_t>(ds.records.size());
        s.info.budget_per_sample = ds.records.front().shots;
        s.info.seed = seed;
        out[j] = std::move(s);
    });
    return out;
}

const Surrogate *find_surrogate(const std::vector<Surrogate> &surrogates, int level) {
    for (const Surrogate &s : surrogates) {
        if (s.level == level) {
            return &s;
        }
    }
    return nullptr;
}

double predict_at(const Surrogate &s, std::span<const double> x) {
    const std::size_t want = static_cast<std::size_t>(s.dictionary.input_dimension());
    if (x.size() == want || x.empty() || want % x.size() != 0) {
        return predict(s, x);
    }
    std::vector<double> tiled;
    tiled.reserve(want);
    while (tiled.size() < want) {
        tiled.insert(tiled.end(), x.begin(), x.end());
    }
    return predict(s, tiled);
}

MitigationRun run_szne(const std::vector<Surrogate> &surrogates, std::span<const double> x,
                       const ExtrapolationScheme &scheme) {
    MitigationRun run;
    run.x.assign(x.begin(), x.end());
    run.levels = scheme.levels;
    for (int level : scheme.levels) {
        const Surrogate *s = find_surrogate(surrogates, level);
        if (s == nullptr) {
            throw std::invalid_argument("missing surrogate for level " + std::to_string(level));
        }
        run.z.push_back(predict_at(*s, x));
        run.tags.push_back(EntryTag::predicted);
    }
    run.estimate = extrapolate(scheme, run.z);
    return run;
}

ValidationReport validate_and_select(const std::vector<Surrogate> &surrogates, const QuantumDevice &device,
                                     const std::vector<std::vector<double>> &inputs, const std::vector<int> &levels,
                                     std::int64_t validation_shots, double eta, std::uint64_t master_seed,
                                     MeasurementLedger &ledger, int threads) {
    if (inputs.empty()) {
        throw std::invalid_argument("empty validation set");
    }
    std::vector<const Surrogate *> chosen;
    for (int level : levels) {
        const Surrogate *s = find_surrogate(surrogates, level);
        if (s == nullptr) {
            throw std::invalid_argument("missing surrogate for level " + std::to_string(level));
        }
        chosen.push_back(s);
    }
    std::vector<std::vector<double>> sq(inputs.size(), std::vector<double>(levels.size()));
    parallel_for(inputs.size(), threads, [&](std::size_t i) {
        Rng rng(derive_seed(master_seed, {i}));
        for (std::size_t j = 0; j < levels.size(); ++j) {
            const double m = measure(device, inputs[i], levels[j], validation_shots, rng, ledger, Phase::validation).value;
            const double diff = predict_at(*chosen[j], inputs[i]) - m;
            sq[i][j] = diff * diff;
        }
    });
    ValidationReport report;
    report.levels = levels;
    report.mse.assign(levels.size(), 0.0);
    for (const auto &row : sq) {
        for (std::size_t j = 0; j < levels.size(); ++j) {
            report.mse[j] += row[j] / static_cast<double>(inputs.size());
        }
    }
    for (std::size_t j = 0; j < levels.size(); ++j) {
        if (report.mse[j] <= eta) {
            report.selected.push_back(levels[j]);
        }
    }
    return report;
}

MitigationRun run_hybrid(const std::vector<Surrogate> &surrogates, const std::vector<int> &selected,
                         const QuantumDevice &device, std::span<const double> x, const ExtrapolationScheme &scheme,
                         std::int64_t shots, Rng &rng, MeasurementLedger &ledger) {
    for (int level : selected) {
        if (std::find(scheme.levels.begin(), scheme.levels.end(), level) == scheme.levels.end()) {
            throw std::invalid_argument("selected level " + std::to_string(level) + " is not a scheme level");
        }
    }
    MitigationRun run;
    run.x.assign(x.begin(), x.end());
    run.levels = scheme.levels;
    const LedgerSnapshot before = ledger.snapshot();
    for (int level : scheme.levels) {
        if (std::find(selected.begin(), selected.end(), level) != selected.end()) {
            const Surrogate *s = find_surrogate(surrogates, level);
            if (s == nullptr) {
                throw std::invalid_argument("missing surrogate for level " + std::to_string(level));
            }
            run.z.push_back(predict_at(*s, x));
            run.tags.push_back(EntryTag::predicted);
        } else {
            run.z.push_back(measure(device, x, level, shots, rng, ledger, Phase::inference).value);
            run.tags.push_back(EntryTag::measured);
        }
    }
    run.estimate = extrapolate(scheme, run.z);
    run.cost = ledger.snapshot() - before;
    return run;
}

}  // namespace szne
