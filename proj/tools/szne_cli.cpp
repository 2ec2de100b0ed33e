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

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "szne/config.hpp"
#include "szne/experiments.hpp"
#include "szne/io.hpp"

namespace {

using namespace szne;
using ojson = nlohmann::ordered_json;

struct Options {
    std::string config_path;
    std::string extrapolation;
    std::string levels;
    std::string datasets;
    std::string surrogates;
    std::vector<std::string> inputs;
    bool data_efficiency = false;
};

ExperimentConfig resolve(const Options &o) {
    ExperimentConfig c = load_config(o.config_path);
    if (!o.extrapolation.empty()) {
        c.extrapolation = parse_extrapolation(o.extrapolation);
    }
    if (!o.levels.empty()) {
        c.levels = parse_levels(o.levels);
    }
    if (const char *dir = std::getenv("SZNE_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
        c.output_dir = dir;
    }
    if (const char *t = std::getenv("SZNE_THREADS"); t != nullptr && *t != '\0') {
        c.threads = std::stoi(t);
        if (c.threads < 1) {
            throw std::invalid_argument("SZNE_THREADS must be positive");
        }
    }
    // Validates the overrides together with the rest of the config.
    return parse_config(config_to_json(c));
}

std::string out_path(const ExperimentConfig &c, const std::string &name) {
    return (std::filesystem::path(c.output_dir) / name).string();
}

void write_ledger(const ExperimentConfig &c, const std::string &name, const LedgerSnapshot &s) {
    write_text_file(out_path(c, name), s.to_json() + "\n");
}

void write_kde(const ExperimentConfig &c, const std::string &name, const std::vector<MitigationRun> &runs) {
    const ResidualReport r = residual_report(runs);
    write_text_file(out_path(c, name), columns_to_csv("residual", r.grid, "density", r.density));
}

std::vector<Surrogate> load_surrogates(const ExperimentConfig &c, const Options &o) {
    const std::string path = o.surrogates.empty() ? out_path(c, "surrogates.json") : o.surrogates;
    return surrogates_from_json(read_text_file(path));
}

int cmd_collect(const Options &o) {
    const ExperimentConfig c = resolve(o);
    const auto device = make_device(c);
    CollectionOptions opt;
    opt.mode = c.surrogate.kind == SurrogateKind::kernel ? LabelMode::shadows : LabelMode::shots;
    opt.sampler = uniform_sampler(c.inputs.radius);
    opt.threads = c.threads;
    MeasurementLedger ledger;
    const auto data = build_training_datasets(*device, c.levels, c.surrogate.samples, c.shots.training,
                                              stream_seed(c.seed, Stream::training), ledger, opt);
    write_text_file(out_path(c, "datasets.jsonl"), datasets_to_jsonl(data));
    write_ledger(c, "ledger_collect.json", ledger.snapshot());
    std::printf("collected %zu levels x %lld records, training cost %llu\n", data.size(),
                static_cast<long long>(c.surrogate.samples),
                static_cast<unsigned long long>(ledger.snapshot().training));
    return 0;
}

int cmd_train(const Options &o) {
    const ExperimentConfig c = resolve(o);
    const std::string path = o.datasets.empty() ? out_path(c, "datasets.jsonl") : o.datasets;
    const LabelMode mode = c.surrogate.kind == SurrogateKind::kernel ? LabelMode::shadows : LabelMode::shots;
    const auto data = datasets_from_jsonl(read_text_file(path), mode);
    const auto surrogates = train_surrogates(data, make_surrogate_settings(c, stream_seed(c.seed, Stream::dictionary)),
                                             stream_seed(c.seed, Stream::training), c.threads);
    write_text_file(out_path(c, "surrogates.json"), surrogates_to_json(surrogates) + "\n");
    for (const Surrogate &s : surrogates) {
        std::printf("level %d: %zu features, %lld samples\n", s.level, s.weights.size(),
                    static_cast<long long>(s.info.samples));
    }
    return 0;
}

int cmd_zne(const Options &o) {
    const ExperimentConfig c = resolve(o);
    const auto device = make_device(c);
    const auto inputs = make_test_inputs(c, *device, stream_seed(c.seed, Stream::test_inputs));
    MeasurementLedger ledger;
    const auto runs = zne_sweep(*device, inputs, make_scheme(c.extrapolation, c.levels), c.shots.inference,
                                stream_seed(c.seed, Stream::inference), ledger, c.threads);
    write_text_file(out_path(c, "zne.csv"), runs_to_csv(runs));
    write_ledger(c, "ledger_zne.json", ledger.snapshot());
    write_kde(c, "kde_zne.csv", runs);
    std::printf("zne: %zu inputs, MSE %.6g, cost %llu\n", runs.size(), mean_squared_residual(runs),
                static_cast<unsigned long long>(ledger.snapshot().total()));
    return 0;
}

int cmd_szne(const Options &o) {
    const ExperimentConfig c = resolve(o);
    const auto device = make_device(c);
    const auto surrogates = load_surrogates(c, o);
    const auto inputs = make_test_inputs(c, *device, stream_seed(c.seed, Stream::test_inputs));
    const auto runs = szne_sweep(surrogates, *device, inputs, make_scheme(c.extrapolation, c.levels), c.threads);
    write_text_file(out_path(c, "szne.csv"), runs_to_csv(runs));
    write_ledger(c, "ledger_szne.json", LedgerSnapshot{});
    write_kde(c, "kde_szne.csv", runs);
    std::printf("szne: %zu inputs, MSE %.6g, inference cost 0\n", runs.size(), mean_squared_residual(runs));
    return 0;
}

int cmd_hybrid(const Options &o) {
    const ExperimentConfig c = resolve(o);
    const HybridResult r = hybrid_study(c);
    std::string table = "level,mse,selected\n";
    for (std::size_t j = 0; j < r.validation.levels.size(); ++j) {
        const int l = r.validation.levels[j];
        const bool sel = std::find(r.validation.selected.begin(), r.validation.selected.end(), l) !=
                         r.validation.selected.end();
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d,%.17g,%d\n", l, r.validation.mse[j], sel ? 1 : 0);
        table += buf;
    }
    write_text_file(out_path(c, "validation.csv"), table);
    write_text_file(out_path(c, "hybrid.csv"), runs_to_csv(r.hybrid));
    write_text_file(out_path(c, "zne.csv"), runs_to_csv(r.zne));
    write_ledger(c, "ledger_hybrid.json", r.hybrid_cost);
    write_ledger(c, "ledger_zne.json", r.zne_cost);
    write_kde(c, "kde_hybrid.csv", r.hybrid);
    write_kde(c, "kde_zne.csv", r.zne);
    std::printf("%s", table.c_str());
    std::printf("hybrid MSE %.6g, zne MSE %.6g\n", r.mse_hybrid, r.mse_zne);
    return 0;
}

int cmd_vqa(const Options &o) {
    const ExperimentConfig c = resolve(o);
    const VqaResult r = vqa_optimize(c);
    std::string csv = "iteration";
    for (std::size_t i = 0; i < r.final_x.size(); ++i) {
        csv += ",x" + std::to_string(i);
    }
    csv += ",energy\n";
    for (const VqaStep &s : r.trajectory) {
        char buf[48];
        csv += std::to_string(s.iteration);
        for (double v : s.x) {
            std::snprintf(buf, sizeof buf, ",%.17g", v);
            csv += buf;
        }
        std::snprintf(buf, sizeof buf, ",%.17g\n", s.energy);
        csv += buf;
    }
    write_text_file(out_path(c, "vqa_trajectory.csv"), csv);
    write_ledger(c, "ledger_vqa.json", r.cost);
    const Hamiltonian h = build_hamiltonian(c.model, c.circuit.n, c.couplings);
    ojson summary;
    summary["estimator"] = vqa_estimator_name(c.optimizer.estimator);
    summary["final_x"] = r.final_x;
    summary["final_energy"] = r.final_energy;
    summary["final_ideal_energy"] = r.final_ideal_energy;
    summary["exact_ground_energy"] = exact_ground_energy(h);
    write_text_file(out_path(c, "vqa_summary.json"), summary.dump(2) + "\n");
    std::printf("%s\n", summary.dump(2).c_str());
    return 0;
}

int cmd_metrology(const Options &o) {
    const ExperimentConfig c = resolve(o);
    const MetrologyResult r = metrology_sweep(c);
    write_text_file(out_path(c, "unmitigated.csv"), runs_to_csv(r.unmitigated));
    write_text_file(out_path(c, "zne.csv"), runs_to_csv(r.zne));
    write_text_file(out_path(c, "szne.csv"), runs_to_csv(r.szne));
    write_ledger(c, "ledger_zne.json", r.zne_cost);
    write_ledger(c, "ledger_szne.json", r.szne_cost);
    write_kde(c, "kde_unmitigated.csv", r.unmitigated);
    write_kde(c, "kde_zne.csv", r.zne);
    write_kde(c, "kde_szne.csv", r.szne);
    ojson summary;
    summary["mse_unmitigated"] = r.mse_unmitigated;
    summary["mse_zne"] = r.mse_zne;
    summary["mse_szne"] = r.mse_szne;
    summary["cost_zne"] = r.zne_cost.total();
    summary["cost_szne"] = r.szne_cost.total();
    if (o.data_efficiency) {
        const DataEfficiencyResult d = data_efficiency_study(c);
        std::string csv = "samples";
        for (int l : d.levels) {
            csv += ",mse_l" + std::to_string(l);
        }
        csv += "\n";
        for (std::size_t i = 0; i < d.sizes.size(); ++i) {
            csv += std::to_string(d.sizes[i]);
            for (double v : d.mse[i]) {
                char buf[32];
                std::snprintf(buf, sizeof buf, ",%.17g", v);
                csv += buf;
            }
            csv += "\n";
        }
        write_text_file(out_path(c, "data_efficiency.csv"), csv);
        std::printf("%s", csv.c_str());
    }
    write_text_file(out_path(c, "metrology_summary.json"), summary.dump(2) + "\n");
    std::printf("%s\n", summary.dump(2).c_str());
    return 0;
}

int cmd_report(const Options &o) {
    const ExperimentConfig c = resolve(o);
    for (const std::string &path : o.inputs) {
        const auto runs = runs_from_csv(read_text_file(path));
        const ResidualReport r = residual_report(runs);
        const std::string stem = std::filesystem::path(path).stem().string();
        write_text_file(out_path(c, "kde_" + stem + ".csv"), columns_to_csv("residual", r.grid, "density", r.density));
        std::printf("%s: n=%zu MSE=%.6g mean=%.6g bandwidth=%.6g\n", path.c_str(), r.count, r.mse, r.mean,
                    r.bandwidth);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Surrogate-enabled zero-noise extrapolation experiments"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("-c,--config", o.config_path, "Experiment config (JSON)")->required()->check(
            CLI::ExistingFile);
        sub->add_option("--extrapolation", o.extrapolation, "linear | quadratic | richardson")
            ->check(CLI::IsMember({"linear", "quadratic", "richardson"}));
        sub->add_option("--levels", o.levels, "Noise levels, e.g. 1,2,3,4,5");
    };
    int (*handler)(const Options &) = nullptr;
    auto sub = [&](const char *name, const char *help, int (*fn)(const Options &)) {
        CLI::App *s = app.add_subcommand(name, help);
        add_common(s);
        s->callback([&handler, fn] { handler = fn; });
        return s;
    };
    sub("collect", "Build training datasets", cmd_collect);
    sub("train", "Fit surrogates from datasets", cmd_train)
        ->add_option("--datasets", o.datasets, "Dataset file (default <output>/datasets.jsonl)");
    sub("zne", "Conventional ZNE over the test inputs", cmd_zne);
    sub("szne", "Surrogate-only ZNE over the test inputs", cmd_szne)
        ->add_option("--surrogates", o.surrogates, "Surrogate file (default <output>/surrogates.json)");
    sub("hybrid", "Validation-selected hybrid ZNE study", cmd_hybrid);
    sub("vqa", "Variational ground-state search", cmd_vqa);
    sub("metrology", "GHZ phase sweep", cmd_metrology)
        ->add_flag("--data-efficiency", o.data_efficiency, "Also run the training-set size study");
    sub("report", "Residual statistics of result tables", cmd_report)
        ->add_option("inputs", o.inputs, "Result CSV files")->required();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }
    try {
        return handler(o);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
