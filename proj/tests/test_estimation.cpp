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
#include <numbers>
#include <random>

#include "szne/circuit.hpp"
#include "szne/estimation.hpp"
#include "szne/hamiltonian.hpp"
#include "szne/simulator.hpp"

namespace szne {
namespace {

using std::numbers::pi;

/// Shot-by-shot l1 sampler: choose a term by |c_i| / B, then a +-1 outcome with mean <P_i>.
double per_shot_estimate(const std::vector<double> &coeff, const std::vector<double> &mean, std::int64_t shots,
                         std::mt19937_64 &rng) {
    double b = 0.0;
    std::vector<double> w;
    for (double c : coeff) {
        b += std::abs(c);
        w.push_back(std::abs(c));
    }
    std::discrete_distribution<int> pick(w.begin(), w.end());
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double sum = 0.0;
    for (std::int64_t s = 0; s < shots; ++s) {
        const int i = pick(rng);
        const double outcome = u(rng) < 0.5 * (1.0 + mean[i]) ? 1.0 : -1.0;
        sum += b * (coeff[i] > 0 ? 1.0 : -1.0) * outcome;
    }
    return sum / static_cast<double>(shots);
}

struct Moments {
    double mean = 0.0;
    double var = 0.0;
};

Moments moments(const std::vector<double> &v) {
    Moments m;
    for (double x : v) {
        m.mean += x;
    }
    m.mean /= static_cast<double>(v.size());
    for (double x : v) {
        m.var += (x - m.mean) * (x - m.mean);
    }
    m.var /= static_cast<double>(v.size() - 1);
    return m;
}

TEST(ShotEstimation, MatchesPerShotSampler) {
    const Observable o = Observable::from_labels({{0.5, "Z0"}, {-0.3, "X1"}, {0.2, "Z0 Z1"}});
    const std::vector<double> coeff{0.5, -0.3, 0.2};
    const std::vector<double> tv{0.4, -0.2, 0.9};
    const double exact = 0.5 * 0.4 + 0.3 * 0.2 + 0.2 * 0.9;
    const int trials = 4000;
    const std::int64_t shots = 200;
    std::mt19937_64 oracle_rng(11);
    Rng rng(12);
    std::vector<double> a;
    std::vector<double> b;
    for (int t = 0; t < trials; ++t) {
        a.push_back(per_shot_estimate(coeff, tv, shots, oracle_rng));
        const ShotEstimate e = estimate_with_shots(tv, o, shots, rng);
        EXPECT_EQ(e.shots, shots);
        EXPECT_DOUBLE_EQ(e.norm_bound, 1.0);
        b.push_back(e.value);
    }
    const Moments ma = moments(a);
    const Moments mb = moments(b);
    const double se = std::sqrt((ma.var + mb.var) / trials);
    EXPECT_NEAR(ma.mean, mb.mean, 5 * se);
    EXPECT_NEAR(mb.mean, exact, 5 * std::sqrt(mb.var / trials));
    // Single-shot variance B^2 - mu^2.
    const double var_theory = (1.0 - exact * exact) / shots;
    EXPECT_NEAR(ma.var / var_theory, 1.0, 0.1);
    EXPECT_NEAR(mb.var / var_theory, 1.0, 0.1);
}

TEST(ShotEstimation, EigenstateIsExact) {
    const Observable o = Observable::from_labels({{1.0, "Z0 Z1"}});
    const ParamCircuit c = CircuitBuilder(2).build();
    const double mu = ideal_expectation(c, std::vector<double>{}, o);
    Rng rng(1);
    for (std::int64_t m : {1, 7, 1000}) {
        EXPECT_EQ(estimate_from_mean(mu, o.norm_bound(), m, rng).value, 1.0);
    }
}

TEST(ShotEstimation, GhzProbeWithinThreeSigma) {
    const std::int64_t m = 100000;
    Rng rng(2);
    int inside = 0;
    for (int t = 0; t < 100; ++t) {
        inside += std::abs(estimate_from_mean(0.9, 1.0, m, rng).value - 0.9) <= 3.0 / std::sqrt(double(m));
    }
    EXPECT_GE(inside, 99);
}

TEST(ShotEstimation, HoeffdingCoverage) {
    const double b = 1.1;
    const double mu = -0.37;
    const std::int64_t m = 500;
    const double delta = 0.05;
    const double radius = b * std::sqrt(2.0 * std::log(2.0 / delta) / m);
    Rng rng(3);
    int covered = 0;
    for (int t = 0; t < 1000; ++t) {
        covered += std::abs(estimate_from_mean(mu, b, m, rng).value - mu) <= radius;
    }
    EXPECT_GE(covered, 950);
}

TEST(ShotEstimation, Reproducible) {
    Rng a(5);
    Rng b(5);
    EXPECT_EQ(estimate_from_mean(0.1, 2.0, 1000, a).value, estimate_from_mean(0.1, 2.0, 1000, b).value);
}

TEST(ShotEstimation, InvalidShotCount) {
    Rng rng(1);
    try {
        estimate_from_mean(0.0, 1.0, 0, rng);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("invalid shot count"), std::string::npos);
    }
    const Observable o = Observable::from_labels({{1.0, "Z0"}});
    EXPECT_THROW(estimate_with_shots(std::vector<double>{0.0, 1.0}, o, 10, rng), std::invalid_argument);
}

TEST(Shadows, ZeroStateZBasisIsPlusOne) {
    Rng rng(4);
    const ShadowSet s = collect_shadows(DensityMatrix(3), 2000, rng);
    EXPECT_EQ(s.count(), 2000);
    for (std::size_t i = 0; i < s.bases.size(); ++i) {
        if (s.bases[i] == 3) {
            EXPECT_EQ(s.outcomes[i], 1);
        }
    }
    EXPECT_NEAR(estimate_from_shadows(s, Observable::from_labels({{1.0, "Z0 Z2"}})), 1.0, 0.15);
}

TEST(Shadows, IdentityCoefficientIsExact) {
    Rng rng(5);
    const ShadowSet s = collect_shadows(DensityMatrix(2), 10, rng);
    EXPECT_DOUBLE_EQ(estimate_from_shadows(s, Observable::from_labels({{2.5, ""}})), 2.5);
}

TEST(Shadows, Unbiased) {
    const ParamCircuit c = build_hea(3, 2);
    std::mt19937_64 xr(6);
    std::uniform_real_distribution<double> u(-pi, pi);
    std::vector<double> x(c.group_count());
    for (double &v : x) {
        v = u(xr);
    }
    NoiseModel noise;
    noise.components = {LocalDepolarizing{0.01, 0.03}};
    const Observable o = build_hamiltonian(HamiltonianModel::heisenberg, 3, {0.1, 0.5, 0.3, 0.5, 0.2}).observable;
    const double exact = noisy_expectation(c, x, o, noise, 2);
    const int batches = 40;
    std::vector<double> est;
    Rng rng(7);
    for (int b = 0; b < batches; ++b) {
        const ShadowSet s = collect_shadows(c, x, noise, 2, 3000, rng);
        EXPECT_EQ(s.level, 2);
        est.push_back(estimate_from_shadows(s, o));
    }
    const Moments m = moments(est);
    EXPECT_NEAR(m.mean, exact, 5 * std::sqrt(m.var / batches));
}

TEST(Shadows, Errors) {
    Rng rng(8);
    EXPECT_THROW(collect_shadows(DensityMatrix(2), 0, rng), std::invalid_argument);
    const ShadowSet s = collect_shadows(DensityMatrix(2), 5, rng);
    EXPECT_THROW(estimate_from_shadows(s, Observable::from_labels({{1.0, "Z2"}})), std::invalid_argument);
    const ParamCircuit wide = build_ghz_probe(12);
    try {
        collect_shadows(wide, std::vector<double>{0.1}, NoiseModel{}, 1, 5, rng);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("shadow collection requires dense backend"), std::string::npos);
    }
}

}  // namespace
}  // namespace szne
