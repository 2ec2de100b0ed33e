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

#include "szne/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "szne/parallel.hpp"

namespace szne {

namespace {

constexpr double kSqrtTwoPi = 2.5066282746310002;

ParamCircuit circuit_for(const CircuitConfig &c, HamiltonianModel model) {
    switch (c.family) {
    case CircuitFamily::ghz:
        return build_ghz_probe(c.n);
    case CircuitFamily::hva:
        return build_hva(model == HamiltonianModel::tfim ? HvaModel::tfim : HvaModel::heisenberg, c.n, c.layers);
    case CircuitFamily::hea:
        return build_hea(c.n, c.layers);
    }
    throw std::invalid_argument("unknown circuit family");
}

int level_index(const std::vector<int> &levels, int level) {
    const auto it = std::find(levels.begin(), levels.end(), level);
    return it == levels.end() ? -1 : static_cast<int>(it - levels.begin());
}

}  // namespace

// ---- Residual statistics ----

ResidualReport residual_report(const std::vector<double> &residuals, int grid_points) {
    if (residuals.empty()) {
        throw std::invalid_argument("cannot compute residuals: no runs");
    }
    if (grid_points < 2) {
        throw std::invalid_argument("density grid needs at least two points");
    }
    ResidualReport r;
    r.count = residuals.size();
    const double n = static_cast<double>(r.count);
    double sq = 0.0;
    for (double v : residuals) {
        r.mean += v / n;
        sq += v * v / n;
    }
    r.mse = sq;
    double var = 0.0;
    for (double v : residuals) {
        var += (v - r.mean) * (v - r.mean);
    }
    const double sigma = r.count > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
    if (!(sigma > 0.0)) {
        r.bandwidth = 0.0;
        r.grid = {r.mean};
        r.density = {1.0};
        return r;
    }
    r.bandwidth = sigma * std::pow(n, -0.2);
    const auto [lo_it, hi_it] = std::minmax_element(residuals.begin(), residuals.end());
    const double lo = *lo_it - 3.0 * r.bandwidth;
    const double hi = *hi_it + 3.0 * r.bandwidth;
    r.grid.resize(grid_points);
    r.density.resize(grid_points);
    for (int g = 0; g < grid_points; ++g) {
        const double t = lo + (hi - lo) * g / (grid_points - 1);
        double acc = 0.0;
        for (double v : residuals) {
            const double u = (t - v) / r.bandwidth;
            acc += std::exp(-0.5 * u * u);
        }
        r.grid[g] = t;
        r.density[g] = acc / (n * r.bandwidth * kSqrtTwoPi);
    }
    return r;
}

ResidualReport residual_report(const std::vector<MitigationRun> &runs, int grid_points) {
    std::vector<double> res;
    res.reserve(runs.size());
    for (const MitigationRun &r : runs) {
        if (!r.residual) {
            throw std::invalid_argument("cannot compute residuals: run without ideal reference");
        }
        res.push_back(*r.residual);
    }
    return residual_report(res, grid_points);
}

double mean_squared_residual(const std::vector<MitigationRun> &runs) {
    if (runs.empty()) {
        throw std::invalid_argument("cannot compute residuals: no runs");
    }
    double acc = 0.0;
    for (const MitigationRun &r : runs) {
        if (!r.residual) {
            throw std::invalid_argument("cannot compute residuals: run without ideal reference");
        }
        acc += *r.residual * *r.residual;
    }
    return acc / static_cast<double>(runs.size());
}

// ---- Task construction ----

ParamCircuit make_circuit(const ExperimentConfig &config) { return circuit_for(config.circuit, config.model); }

Observable make_observable(const ExperimentConfig &config) {
    if (config.circuit.family == CircuitFamily::ghz) {
        return parity_observable(config.circuit.n);
    }
    return build_hamiltonian(config.model, config.circuit.n, config.couplings).observable;
}

std::unique_ptr<QuantumDevice> make_device(const ExperimentConfig &config) {
    const bool global_only =
        !config.noise.has_local_channels() && config.noise.amplification != Amplification::structural_fold;
    const bool ghz = config.circuit.family == CircuitFamily::ghz;
    Backend backend = config.circuit.backend;
    if (backend == Backend::automatic) {
        backend = !global_only ? Backend::dense : ghz ? Backend::analytic : Backend::lightcone;
    }
    switch (backend) {
    case Backend::analytic:
        if (!ghz) {
            throw std::invalid_argument("analytic backend is available for the GHZ probe only");
        }
        return std::make_unique<GhzDevice>(config.circuit.n, config.noise);
    case Backend::lightcone:
        return std::make_unique<LightconeDevice>(make_circuit(config), make_observable(config), config.noise);
    default:
        return std::make_unique<DenseDevice>(make_circuit(config), make_observable(config), config.noise);
    }
}

SurrogateSettings make_surrogate_settings(const ExperimentConfig &config, std::uint64_t seed) {
    SurrogateSettings s;
    s.kind = config.surrogate.kind;
    s.gamma = config.surrogate.gamma;
    s.truncation = config.surrogate.truncation;
    s.materialize_cap = config.surrogate.feature_cap;
    if (s.kind == SurrogateKind::kernel) {
        return s;
    }
    const std::vector<int> sizes = make_circuit(config).group_sizes();
    const int lambda = config.surrogate.truncation;
    Rng rng(seed);
    switch (config.surrogate.dictionary) {
    case DictionaryMode::independent:
        s.dictionary = FeatureDictionary::independent(frequency_set(static_cast<int>(sizes.size()), lambda,
                                                                    config.surrogate.feature_cap,
                                                                    config.surrogate.feature_samples, rng));
        break;
    case DictionaryMode::grouped_monomial:
        s.dictionary = FeatureDictionary::grouped_monomial(sizes, lambda, config.surrogate.feature_cap,
                                                           config.surrogate.feature_samples, rng);
        break;
    case DictionaryMode::grouped_harmonic:
        s.dictionary = FeatureDictionary::grouped_harmonic(sizes, lambda);
        break;
    }
    return s;
}

std::vector<std::vector<double>> make_uniform_inputs(int count, int dimension, double radius, std::uint64_t seed) {
    const InputSampler sampler = uniform_sampler(radius);
    std::vector<std::vector<double>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(i)}));
        out.push_back(sampler(dimension, rng));
    }
    return out;
}

std::vector<std::vector<double>> make_test_inputs(const ExperimentConfig &config, const QuantumDevice &device,
                                                  std::uint64_t seed) {
    const InputConfig &in = config.inputs;
    std::vector<std::vector<double>> out;
    if (in.grid_high > in.grid_low && device.parameter_count() == 1) {
        for (int i = 0; i < in.test_count; ++i) {
            out.push_back({in.grid_low + (in.grid_high - in.grid_low) * i / in.test_count});
        }
        return out;
    }
    const InputSampler sampler = uniform_sampler(in.radius);
    const std::uint64_t max_draws = 1000ULL * static_cast<std::uint64_t>(in.test_count);
    for (std::uint64_t k = 0; out.size() < static_cast<std::size_t>(in.test_count); ++k) {
        if (k >= max_draws) {
            throw std::runtime_error("test input filter rejects nearly all draws");
        }
        Rng rng(derive_seed(seed, {k}));
        std::vector<double> x = sampler(device.parameter_count(), rng);
        if (in.min_abs_ideal > 0.0 && !(std::abs(device.ideal_value(x)) > in.min_abs_ideal)) {
            continue;
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::uint64_t stream_seed(std::uint64_t master, Stream s) {
    return derive_seed(master, {0x5712ea3ULL, static_cast<std::uint64_t>(s)});
}

// ---- Sweeps ----

std::vector<MitigationRun> unmitigated_sweep(const QuantumDevice &device, const std::vector<std::vector<double>> &inputs,
                                             std::int64_t shots, std::uint64_t seed, MeasurementLedger &ledger,
                                             int threads) {
    std::vector<MitigationRun> out(inputs.size());
    parallel_for(inputs.size(), threads, [&](std::size_t i) {
        Rng rng(derive_seed(seed, {i}));
        MitigationRun r;
        r.x = inputs[i];
        r.levels = {1};
        r.z = {measure(device, inputs[i], 1, shots, rng, ledger, Phase::inference).value};
        r.tags = {EntryTag::measured};
        r.estimate = r.z[0];
        r.cost = {0, 0, static_cast<std::uint64_t>(shots)};
        r.set_ideal(device.ideal_value(inputs[i]));
        out[i] = std::move(r);
    });
    return out;
}

std::vector<MitigationRun> zne_sweep(const QuantumDevice &device, const std::vector<std::vector<double>> &inputs,
                                     const ExtrapolationScheme &scheme, std::int64_t shots, std::uint64_t seed,
                                     MeasurementLedger &ledger, int threads) {
    return hybrid_sweep({}, {}, device, inputs, scheme, shots, seed, ledger, threads);
}

std::vector<MitigationRun> szne_sweep(const std::vector<Surrogate> &surrogates, const QuantumDevice &device,
                                      const std::vector<std::vector<double>> &inputs,
                                      const ExtrapolationScheme &scheme, int threads) {
    std::vector<MitigationRun> out(inputs.size());
    parallel_for(inputs.size(), threads, [&](std::size_t i) {
        MitigationRun r = run_szne(surrogates, inputs[i], scheme);
        r.set_ideal(device.ideal_value(inputs[i]));
        out[i] = std::move(r);
    });
    return out;
}

std::vector<MitigationRun> hybrid_sweep(const std::vector<Surrogate> &surrogates, const std::vector<int> &selected,
                                        const QuantumDevice &device, const std::vector<std::vector<double>> &inputs,
                                        const ExtrapolationScheme &scheme, std::int64_t shots, std::uint64_t seed,
                                        MeasurementLedger &ledger, int threads) {
    const std::uint64_t measured = scheme.levels.size() - std::count_if(scheme.levels.begin(), scheme.levels.end(),
                                                                        [&](int l) {
                                                                            return std::find(selected.begin(),
                                                                                             selected.end(),
                                                                                             l) != selected.end();
                                                                        });
    std::vector<MitigationRun> out(inputs.size());
    parallel_for(inputs.size(), threads, [&](std::size_t i) {
        Rng rng(derive_seed(seed, {i}));
        // A private ledger keeps the per-run cost exact when inputs run concurrently.
        MeasurementLedger local;
        MitigationRun r = run_hybrid(surrogates, selected, device, inputs[i], scheme, shots, rng, local);
        ledger.add(Phase::inference, measured * static_cast<std::uint64_t>(shots));
        r.set_ideal(device.ideal_value(inputs[i]));
        out[i] = std::move(r);
    });
    return out;
}

std::vector<MitigationRun> unmitigated_from_zne(const std::vector<MitigationRun> &zne_runs) {
    std::vector<MitigationRun> out;
    out.reserve(zne_runs.size());
    for (const MitigationRun &z : zne_runs) {
        const int j = level_index(z.levels, 1);
        if (j < 0) {
            throw std::invalid_argument("runs do not include level 1");
        }
        MitigationRun r;
        r.x = z.x;
        r.levels = {1};
        r.z = {z.z[j]};
        r.tags = {z.tags[j]};
        r.estimate = z.z[j];
        if (z.ideal) {
            r.set_ideal(*z.ideal);
        }
        out.push_back(std::move(r));
    }
    return out;
}

TrainedSurrogates collect_and_train(const ExperimentConfig &config, const QuantumDevice &device,
                                    MeasurementLedger &ledger, std::uint64_t seed) {
    CollectionOptions options;
    options.mode = config.surrogate.kind == SurrogateKind::kernel ? LabelMode::shadows : LabelMode::shots;
    options.sampler = uniform_sampler(config.inputs.radius);
    options.threads = config.threads;
    TrainedSurrogates t;
    t.datasets = build_training_datasets(device, config.levels, config.surrogate.samples, config.shots.training, seed,
                                         ledger, options);
    const SurrogateSettings settings = make_surrogate_settings(config, stream_seed(config.seed, Stream::dictionary));
    t.surrogates = train_surrogates(t.datasets, settings, seed, config.threads);
    return t;
}

// ---- Studies ----

MetrologyResult metrology_sweep(const ExperimentConfig &config) {
    const std::unique_ptr<QuantumDevice> device = make_device(config);
    const ExtrapolationScheme scheme = make_scheme(config.extrapolation, config.levels);
    MetrologyResult r;
    r.inputs = make_test_inputs(config, *device, stream_seed(config.seed, Stream::test_inputs));

    MeasurementLedger zne_ledger;
    r.zne = zne_sweep(*device, r.inputs, scheme, config.shots.inference, stream_seed(config.seed, Stream::inference),
                      zne_ledger, config.threads);
    r.zne_cost = zne_ledger.snapshot();
    if (level_index(config.levels, 1) >= 0) {
        r.unmitigated = unmitigated_from_zne(r.zne);
    } else {
        MeasurementLedger extra;
        r.unmitigated = unmitigated_sweep(*device, r.inputs, config.shots.inference,
                                          stream_seed(config.seed, Stream::unmitigated), extra, config.threads);
    }

    MeasurementLedger szne_ledger;
    const TrainedSurrogates trained =
        collect_and_train(config, *device, szne_ledger, stream_seed(config.seed, Stream::training));
    r.szne = szne_sweep(trained.surrogates, *device, r.inputs, scheme, config.threads);
    r.szne_cost = szne_ledger.snapshot();

    r.mse_unmitigated = mean_squared_residual(r.unmitigated);
    r.mse_zne = mean_squared_residual(r.zne);
    r.mse_szne = mean_squared_residual(r.szne);
    return r;
}

DataEfficiencyResult data_efficiency_study(const ExperimentConfig &config) {
    const std::unique_ptr<QuantumDevice> device = make_device(config);
    const std::vector<std::vector<double>> inputs =
        make_test_inputs(config, *device, stream_seed(config.seed, Stream::test_inputs));
    DataEfficiencyResult out;
    out.sizes = config.data_efficiency.sizes;
    out.levels = config.levels;
    out.mse.assign(out.sizes.size(), std::vector<double>(out.levels.size(), 0.0));

    // Exact noisy targets; the coherent offset stream is fixed per input.
    std::vector<std::vector<double>> targets(inputs.size(), std::vector<double>(out.levels.size()));
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        Rng rng(derive_seed(stream_seed(config.seed, Stream::validation), {i}));
        for (std::size_t j = 0; j < out.levels.size(); ++j) {
            targets[i][j] = device->noisy_value(inputs[i], out.levels[j], rng);
        }
    }
    const int repeats = config.data_efficiency.repeats;
    for (int rep = 0; rep < repeats; ++rep) {
        for (std::size_t s = 0; s < out.sizes.size(); ++s) {
            ExperimentConfig c = config;
            c.surrogate.samples = out.sizes[s];
            MeasurementLedger ledger;
            const std::uint64_t seed = derive_seed(stream_seed(config.seed, Stream::training),
                                                   {static_cast<std::uint64_t>(rep),
                                                    static_cast<std::uint64_t>(out.sizes[s])});
            const TrainedSurrogates t = collect_and_train(c, *device, ledger, seed);
            for (std::size_t j = 0; j < out.levels.size(); ++j) {
                const Surrogate *sur = find_surrogate(t.surrogates, out.levels[j]);
                double acc = 0.0;
                for (std::size_t i = 0; i < inputs.size(); ++i) {
                    const double e = predict_at(*sur, inputs[i]) - targets[i][j];
                    acc += e * e;
                }
                out.mse[s][j] += acc / static_cast<double>(inputs.size()) / repeats;
            }
        }
    }
    return out;
}

HybridResult hybrid_study(const ExperimentConfig &config) {
    const std::unique_ptr<QuantumDevice> device = make_device(config);
    const ExtrapolationScheme scheme = make_scheme(config.extrapolation, config.levels);
    HybridResult r;
    MeasurementLedger ledger;
    const TrainedSurrogates trained =
        collect_and_train(config, *device, ledger, stream_seed(config.seed, Stream::training));
    const std::uint64_t vseed = stream_seed(config.seed, Stream::validation);
    const std::vector<std::vector<double>> validation_inputs =
        make_uniform_inputs(config.hybrid.validation_count, device->parameter_count(), config.inputs.radius, vseed);
    r.validation = validate_and_select(trained.surrogates, *device, validation_inputs, config.levels,
                                       config.shots.validation, config.hybrid.eta, derive_seed(vseed, {1}), ledger,
                                       config.threads);
    r.inputs = make_test_inputs(config, *device, stream_seed(config.seed, Stream::test_inputs));
    const std::uint64_t iseed = stream_seed(config.seed, Stream::inference);
    r.hybrid = hybrid_sweep(trained.surrogates, r.validation.selected, *device, r.inputs, scheme,
                            config.shots.inference, iseed, ledger, config.threads);
    r.hybrid_cost = ledger.snapshot();
    r.surrogates = trained.surrogates;
    MeasurementLedger zne_ledger;
    r.zne = zne_sweep(*device, r.inputs, scheme, config.shots.inference, iseed, zne_ledger, config.threads);
    r.zne_cost = zne_ledger.snapshot();
    r.mse_zne = mean_squared_residual(r.zne);
    r.mse_hybrid = mean_squared_residual(r.hybrid);
    return r;
}

VqaResult vqa_optimize(const ExperimentConfig &config, const QuantumDevice &device,
                       const std::vector<Surrogate> &surrogates, MeasurementLedger &ledger) {
    const OptimizerConfig &opt = config.optimizer;
    if (!(opt.fd_step > 0.0) || !(opt.learning_rate > 0.0)) {
        throw std::invalid_argument("invalid optimizer settings");
    }
    const double b = device.observable().norm_bound();
    const ExtrapolationScheme scheme = make_scheme(config.extrapolation, config.levels);
    const int d = device.parameter_count();
    Rng init(stream_seed(config.seed, Stream::init));
    std::vector<double> x(d);
    for (double &v : x) {
        v = uniform(init, -opt.init_radius, opt.init_radius);
    }
    const std::uint64_t base = stream_seed(config.seed, Stream::inference);
    std::uint64_t call = 0;
    auto estimate = [&](const std::vector<double> &at) {
        Rng rng(derive_seed(base, {call++}));
        double e = 0.0;
        switch (opt.estimator) {
        case VqaEstimator::unmitigated:
            e = measure(device, at, 1, config.shots.inference, rng, ledger, Phase::inference).value;
            break;
        case VqaEstimator::zne:
            e = run_conventional_zne(device, at, scheme, config.shots.inference, rng, ledger).estimate;
            break;
        case VqaEstimator::szne:
            e = run_szne(surrogates, at, scheme).estimate;
            break;
        }
        if (!std::isfinite(e) || e < -b) {
            throw std::runtime_error("estimator inconsistency: energy below -B");
        }
        return e;
    };

    VqaResult r;
    const LedgerSnapshot before = ledger.snapshot();
    std::vector<double> grad(d);
    for (int it = 0; it < opt.iterations; ++it) {
        r.trajectory.push_back({it + 1, x, estimate(x)});
        for (int i = 0; i < d; ++i) {
            std::vector<double> xp = x;
            std::vector<double> xm = x;
            xp[i] += opt.fd_step;
            xm[i] -= opt.fd_step;
            grad[i] = (estimate(xp) - estimate(xm)) / (2.0 * opt.fd_step);
        }
        for (int i = 0; i < d; ++i) {
            x[i] -= opt.learning_rate * grad[i] / b;
        }
    }
    if (r.trajectory.empty()) {
        r.trajectory.push_back({0, x, estimate(x)});
    }
    r.final_x = r.trajectory.back().x;
    r.final_energy = r.trajectory.back().energy;
    r.final_ideal_energy = device.ideal_value(r.final_x);
    r.cost = ledger.snapshot() - before;
    return r;
}

VqaResult vqa_optimize(const ExperimentConfig &config) {
    const std::unique_ptr<QuantumDevice> device = make_device(config);
    MeasurementLedger ledger;
    std::vector<Surrogate> surrogates;
    if (config.optimizer.estimator == VqaEstimator::szne) {
        surrogates = collect_and_train(config, *device, ledger, stream_seed(config.seed, Stream::training)).surrogates;
    }
    VqaResult r = vqa_optimize(config, *device, surrogates, ledger);
    r.cost = ledger.snapshot();
    return r;
}

}  // namespace szne
