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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "json.hpp"
#include "szne/config.hpp"
#include "szne/experiments.hpp"
#include "szne/hamiltonian.hpp"
#include "szne/io.hpp"

namespace szne {
namespace {

using std::numbers::pi;

std::string config_path(const std::string &name) { return std::string(SZNE_SOURCE_DIR) + "/configs/" + name; }

ExperimentConfig metrology_config(std::uint64_t seed) {
    ExperimentConfig c = load_config(config_path("metrology.json"));
    c.seed = seed;
    return c;
}

/// Noiseless six-site TFIM with surrogates that reproduce the energy landscape exactly.
struct ExactLandscape {
    ExperimentConfig config;
    std::unique_ptr<QuantumDevice> device;
    std::vector<Surrogate> surrogates;
};

ExactLandscape exact_tfim_landscape() {
    ExactLandscape e;
    e.config = parse_config(R"({"task": "vqa", "circuit": {"family": "hva", "n": 6, "layers": 1, "backend": "dense"},
        "noise": {"components": []}, "levels": [1], "extrapolation": "richardson",
        "optimizer": {"estimator": "szne", "iterations": 50}})");
    e.device = make_device(e.config);
    const ParamCircuit c = make_circuit(e.config);
    int total = 0;
    for (int s : c.group_sizes()) {
        total += s;
    }
    const FeatureDictionary dict = FeatureDictionary::grouped_monomial(c.group_sizes(), total);
    std::vector<std::vector<double>> xs = make_uniform_inputs(600, c.group_count(), pi, 3);
    std::vector<double> ys;
    for (const auto &x : xs) {
        ys.push_back(e.device->ideal_value(x));
    }
    e.surrogates = {fit_ridge_surrogate(xs, ys, dict, 1e-13, 1)};
    return e;
}

TEST(Residuals, ZeroResidualsSpike) {
    const ResidualReport r = residual_report(std::vector<double>(10, 0.0));
    EXPECT_EQ(r.count, 10u);
    EXPECT_EQ(r.mse, 0.0);
    EXPECT_EQ(r.mean, 0.0);
    EXPECT_EQ(r.bandwidth, 0.0);
    EXPECT_EQ(r.grid, std::vector<double>{0.0});
    EXPECT_EQ(r.density, std::vector<double>{1.0});
}

TEST(Residuals, HandBuiltList) {
    const ResidualReport r = residual_report(std::vector<double>{0.1, -0.1});
    EXPECT_NEAR(r.mse, 0.01, 1e-15);
    EXPECT_NEAR(r.mean, 0.0, 1e-15);
}

TEST(Residuals, KernelDensity) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g(0.2, 0.5);
    std::vector<double> v(400);
    for (double &x : v) {
        x = g(rng);
    }
    const ResidualReport r = residual_report(v);
    double mean = 0.0;
    double var = 0.0;
    for (double x : v) {
        mean += x / 400.0;
    }
    for (double x : v) {
        var += (x - mean) * (x - mean) / 399.0;
    }
    EXPECT_NEAR(r.bandwidth, std::sqrt(var) * std::pow(400.0, -0.2), 1e-12);
    ASSERT_EQ(r.grid.size(), 201u);
    double integral = 0.0;
    std::size_t peak = 0;
    for (std::size_t i = 1; i < r.grid.size(); ++i) {
        integral += 0.5 * (r.density[i] + r.density[i - 1]) * (r.grid[i] - r.grid[i - 1]);
        if (r.density[i] > r.density[peak]) {
            peak = i;
        }
    }
    EXPECT_NEAR(integral, 1.0, 0.01);
    EXPECT_NEAR(r.grid[peak], 0.2, 0.15);
}

TEST(Residuals, RequiresIdeal) {
    MitigationRun run;
    run.estimate = 0.3;
    try {
        residual_report(std::vector<MitigationRun>{run});
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("cannot compute residuals"), std::string::npos);
    }
    run.set_ideal(0.1);
    EXPECT_NEAR(mean_squared_residual({run}), 0.04, 1e-15);
}

TEST(Vqa, ExactGradientsDecreaseEnergy) {
    const ExactLandscape e = exact_tfim_landscape();
    MeasurementLedger ledger;
    const VqaResult r = vqa_optimize(e.config, *e.device, e.surrogates, ledger);
    ASSERT_EQ(r.trajectory.size(), 50u);
    for (std::size_t i = 1; i < r.trajectory.size(); ++i) {
        EXPECT_LT(r.trajectory[i].energy, r.trajectory[i - 1].energy) << "iteration " << i;
    }
    EXPECT_EQ(ledger.snapshot(), LedgerSnapshot{});
}

TEST(Vqa, NoiselessSmallChainReachesGroundEnergy) {
    ExactLandscape e = exact_tfim_landscape();
    e.config.optimizer.iterations = 1500;
    MeasurementLedger ledger;
    const VqaResult r = vqa_optimize(e.config, *e.device, e.surrogates, ledger);
    const double exact = exact_ground_energy(build_hamiltonian(HamiltonianModel::tfim, 6, {0.1, 0.5}));
    EXPECT_NEAR(r.final_ideal_energy, exact, 0.05);
    EXPECT_NEAR(r.final_energy, r.final_ideal_energy, 1e-6);
}

TEST(Vqa, ZneLedgerPerIteration) {
    ExperimentConfig c = parse_config(R"({"task": "vqa", "circuit": {"family": "hva", "n": 8, "layers": 1},
        "noise": {"components": [{"type": "global_depolarizing", "p": 0.05}]},
        "shots": {"inference": 1000000},
        "optimizer": {"estimator": "zne", "iterations": 3}})");
    const VqaResult r = vqa_optimize(c);
    EXPECT_EQ(r.cost, (LedgerSnapshot{0, 0, 3u * 5u * 5u * 1000000u}));
    EXPECT_EQ(r.trajectory.size(), 3u);
    EXPECT_EQ(r.final_x, r.trajectory.back().x);
    EXPECT_EQ(r.final_energy, r.trajectory.back().energy);
}

TEST(Vqa, EstimatorInconsistency) {
    ExactLandscape e = exact_tfim_landscape();
    Surrogate low = e.surrogates[0];
    std::fill(low.weights.begin(), low.weights.end(), 0.0);
    low.weights[0] = -100.0;
    MeasurementLedger ledger;
    EXPECT_THROW(vqa_optimize(e.config, *e.device, {low}, ledger), std::runtime_error);
}

TEST(Metrology, OrderingAndUnmitigatedLevel) {
    double unmit = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const MetrologyResult r = metrology_sweep(metrology_config(seed));
        EXPECT_LT(r.mse_zne, r.mse_unmitigated);
        EXPECT_LT(r.mse_szne, r.mse_unmitigated);
        EXPECT_EQ(r.zne_cost, (LedgerSnapshot{0, 0, 50000000}));
        EXPECT_EQ(r.szne_cost, (LedgerSnapshot{10000000, 0, 0}));
        unmit += r.mse_unmitigated / 5.0;
    }
    // 0.1^2 E[cos^2] on the grid plus shot noise.
    EXPECT_NEAR(unmit / 4.84e-3, 1.0, 0.5);
}

TEST(Metrology, NoiselessSweepAtShotFloor) {
    ExperimentConfig c = metrology_config(2);
    c.noise = NoiseModel::global_depolarizing(0.0);
    const MetrologyResult r = metrology_sweep(c);
    const double floor = 2.0 / 20000.0 * std::log(40.0);
    EXPECT_LE(r.mse_unmitigated, floor);
    EXPECT_LE(r.mse_zne, floor);
    EXPECT_LE(r.mse_szne, floor);
}

TEST(Metrology, GridInputs) {
    const ExperimentConfig c = metrology_config(1);
    const auto device = make_device(c);
    const auto inputs = make_test_inputs(c, *device, 5);
    ASSERT_EQ(inputs.size(), 500u);
    EXPECT_EQ(inputs[0][0], 0.0);
    EXPECT_LT(inputs.back()[0], 4 * pi / 100);
    EXPECT_EQ(device->parameter_count(), 1);
}

TEST(DataEfficiency, MonotoneInTrainingSize) {
    const DataEfficiencyResult r = data_efficiency_study(metrology_config(1));
    ASSERT_EQ(r.sizes, (std::vector<std::int64_t>{4, 8, 16, 32}));
    for (std::size_t j = 0; j < r.levels.size(); ++j) {
        for (std::size_t i = 1; i < r.sizes.size(); ++i) {
            EXPECT_LE(r.mse[i][j], r.mse[i - 1][j]) << "level " << r.levels[j] << " size " << r.sizes[i];
        }
    }
}

TEST(Config, Defaults) {
    const ExperimentConfig c = parse_config("{}");
    EXPECT_EQ(c.task, "metrology");
    EXPECT_EQ(c.levels, (std::vector<int>{1, 2, 3, 4, 5}));
    EXPECT_EQ(c.shots.validation, 40000);
    EXPECT_EQ(c.optimizer.iterations, 1500);
    EXPECT_DOUBLE_EQ(c.optimizer.learning_rate, 0.1);
    EXPECT_DOUBLE_EQ(c.surrogate.gamma, 1e-6);
    EXPECT_DOUBLE_EQ(c.hybrid.eta, 0.1);
}

TEST(Config, Errors) {
    auto message = [](const std::string &text) {
        try {
            parse_config(text);
        } catch (const std::invalid_argument &e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(message(R"({"circuit": {"qubits": 3}})").find("unknown config key 'circuit.qubits'"),
              std::string::npos);
    EXPECT_NE(message(R"({"task": "chemistry"})").find("unknown task"), std::string::npos);
    EXPECT_NE(message(R"({"levels": []})").find("no noise levels given"), std::string::npos);
    EXPECT_NE(message(R"({"shots": {"inference": 0}})").find("invalid shot count"), std::string::npos);
    EXPECT_NE(message(R"({"surrogate": {"samples": 0}})").find("empty budget"), std::string::npos);
    EXPECT_NE(message(R"({"noise": {"components": [{"type": "crosstalk"}]}})").find("unknown noise component"),
              std::string::npos);
    EXPECT_NE(message("{").find("malformed config"), std::string::npos);
    EXPECT_THROW(load_config("/nonexistent/config.json"), std::runtime_error);
}

TEST(Config, RoundTrip) {
    for (const char *name : {"metrology.json", "vqa_tfim.json", "hybrid_hea.json"}) {
        const ExperimentConfig c = load_config(config_path(name));
        const std::string once = config_to_json(c);
        EXPECT_EQ(config_to_json(parse_config(once)), once) << name;
    }
}

TEST(Config, ShippedFiles) {
    const ExperimentConfig m = load_config(config_path("metrology.json"));
    EXPECT_EQ(m.circuit.n, 100);
    EXPECT_EQ(m.shots.inference, 20000);
    EXPECT_EQ(m.surrogate.samples, 100);
    const ExperimentConfig v = load_config(config_path("vqa_tfim.json"));
    EXPECT_EQ(v.shots.training, 1000000);
    EXPECT_EQ(v.surrogate.samples, 200);
    const ExperimentConfig h = load_config(config_path("hybrid_hea.json"));
    EXPECT_EQ(h.circuit.n, 6);
    EXPECT_EQ(h.surrogate.samples, 3000);
    EXPECT_EQ(h.surrogate.kind, SurrogateKind::kernel);
    EXPECT_EQ(h.shots.validation, 40000);
}

TEST(Io, DatasetsRoundTrip) {
    const GhzDevice device(10, NoiseModel::global_depolarizing(0.1));
    MeasurementLedger ledger;
    CollectionOptions opt;
    opt.sampler = uniform_sampler(pi);
    const auto data = build_training_datasets(device, {1, 2, 3}, 7, 100, 5, ledger, opt);
    const auto back = datasets_from_jsonl(datasets_to_jsonl(data));
    ASSERT_EQ(back.size(), data.size());
    for (std::size_t j = 0; j < data.size(); ++j) {
        EXPECT_EQ(back[j].level, data[j].level);
        EXPECT_EQ(back[j].records, data[j].records);
    }
}

TEST(Io, SurrogatesRoundTrip) {
    std::mt19937_64 rng(3);
    std::vector<std::vector<double>> xs = make_uniform_inputs(40, 3, pi, 2);
    std::vector<double> ys;
    for (const auto &x : xs) {
        ys.push_back(std::cos(x[0]) * std::sin(x[2]));
    }
    Rng frng(4);
    std::vector<Surrogate> all{
        fit_ridge_surrogate(xs, ys, FeatureDictionary::independent(frequency_set(3, 2)), 1e-6, 2),
        fit_ridge_surrogate(xs, ys, FeatureDictionary::grouped_monomial({2, 5, 1}, 3, 10, 8, frng), 1e-6, 3),
        fit_kernel_surrogate(xs, ys, 2, 4),
    };
    Surrogate h;
    h.dictionary = FeatureDictionary::grouped_harmonic({100}, 2);
    h.weights = {0.1, 0.2, 0.3, 0.4, 0.5};
    h.info = {100, 20000, 99};
    all.push_back(h);
    EXPECT_TRUE(all[1].dictionary.sampled());
    for (const Surrogate &s : all) {
        EXPECT_EQ(surrogate_from_json(surrogate_to_json(s)), s);
    }
    EXPECT_EQ(surrogates_from_json(surrogates_to_json(all)), all);
    nlohmann::json j = nlohmann::json::parse(surrogate_to_json(h));
    j["weights"].push_back(1.0);
    EXPECT_THROW(surrogate_from_json(j.dump()), std::invalid_argument);
}

TEST(Io, RunsCsvRoundTrip) {
    const GhzDevice device(10, NoiseModel::global_depolarizing(0.1));
    MeasurementLedger ledger;
    const auto runs = zne_sweep(device, make_uniform_inputs(5, 1, pi, 1),
                                make_scheme(ExtrapolationKind::linear, {1, 2, 3}), 100, 3, ledger);
    const auto back = runs_from_csv(runs_to_csv(runs));
    ASSERT_EQ(back.size(), runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
        EXPECT_EQ(back[i].x, runs[i].x);
        EXPECT_EQ(back[i].levels, runs[i].levels);
        EXPECT_EQ(back[i].z, runs[i].z);
        EXPECT_EQ(back[i].tags, runs[i].tags);
        EXPECT_EQ(back[i].estimate, runs[i].estimate);
        EXPECT_EQ(back[i].ideal, runs[i].ideal);
        EXPECT_EQ(back[i].residual, runs[i].residual);
    }
    EXPECT_THROW(runs_from_csv("nonsense"), std::invalid_argument);
}

TEST(Io, TextFiles) {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "szne_io_test" / "nested";
    std::filesystem::remove_all(dir.parent_path());
    const std::string path = (dir / "a.txt").string();
    write_text_file(path, "hello\n");
    EXPECT_EQ(read_text_file(path), "hello\n");
    std::filesystem::remove_all(dir.parent_path());
    EXPECT_THROW(read_text_file(path), std::runtime_error);
    EXPECT_EQ(columns_to_csv("a", {1.0, 2.0}, "b", {0.5, 0.25}), "a,b\n1,0.5\n2,0.25\n");
}

}  // namespace
}  // namespace szne
