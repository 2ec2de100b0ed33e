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

#include "szne/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "szne/surrogates.hpp"

namespace szne {

namespace {

void require(bool ok, const char *msg) {
    if (!ok) {
        throw std::invalid_argument(msg);
    }
}

}  // namespace

double sample_threshold(double norm_bound, double m, int d, int truncation, double delta) {
    require(norm_bound > 0.0 && m > 0.0, "norm bound and M must be positive");
    require(d >= 1 && truncation >= 1, "dimension and truncation must be positive");
    require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
    const double base = d * std::numbers::e / truncation;
    return 64.0 * norm_bound * norm_bound * m * m / 3.0 * std::pow(base, 4.0 * truncation) * std::log(1.0 / delta) /
           9.0;
}

double shot_noise_term(double lipschitz, int levels, double norm_bound, double shots) {
    require(lipschitz >= 0.0 && levels >= 1 && norm_bound > 0.0 && shots >= 1.0, "invalid shot-noise inputs");
    return 4.0 * lipschitz * lipschitz * levels * norm_bound * norm_bound * std::log(40.0) / shots;
}

double szne_error_bound(double zeta_sq, double lipschitz, int levels, double norm_bound, double shots) {
    require(zeta_sq >= 0.0, "zeta^2 must be non-negative");
    return zeta_sq + shot_noise_term(lipschitz, levels, norm_bound, shots);
}

KernelRequirements kernel_surrogate_requirements(double norm_bound, int locality, int d, double gradient_bound, double p,
                                 double p_z, double epsilon, double delta) {
    require(epsilon > 0.0 && std::isfinite(epsilon), "target error must be positive");
    require(norm_bound > 0.0 && locality >= 0 && d >= 1, "invalid observable or dimension");
    require(gradient_bound >= 0.0 && p >= 0.0 && p_z >= 0.0, "invalid noise or gradient bound");
    require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
    KernelRequirements r{};
    r.lambda_c = 4.0 * gradient_bound / epsilon;
    r.lambda_p = (p + p_z) > 0.0 ? std::log(2.0 * norm_bound / std::sqrt(epsilon)) / (2.0 * (p + p_z))
                                 : std::numeric_limits<double>::infinity();
    const double lam = std::max(0.0, std::min({r.lambda_c, r.lambda_p, static_cast<double>(d)}));
    r.truncation = static_cast<int>(std::floor(lam));
    r.frequency_count = frequency_set_size(d, r.truncation);
    r.samples = r.frequency_count * 2.0 * norm_bound * norm_bound * std::pow(9.0, locality) / epsilon *
                std::log(2.0 * r.frequency_count / delta);
    return r;
}

RidgeRequirements ridge_surrogate_requirements(double norm_bound, int d, double q, double radius, int truncation, double delta) {
    require(norm_bound > 0.0 && d >= 1 && truncation >= 1, "invalid inputs");
    require(q > 0.0 && radius > 0.0, "q and R must be positive");
    require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
    const double qr = q * (1.0 + radius);
    if (qr >= 1.0 / std::numbers::e) {
        throw std::invalid_argument("assumption violated: q(1+R) must be below 1/e");
    }
    RidgeRequirements r{};
    r.samples = std::pow(1.0 / qr, 4.0 * truncation) * std::log(1.0 / delta) / 9.0;
    r.epsilon = 16.0 * norm_bound * norm_bound * std::pow(d * std::numbers::e * qr / truncation, 2.0 * truncation);
    r.truncation_condition = truncation > d * std::numbers::e * qr;
    return r;
}

}  // namespace szne
