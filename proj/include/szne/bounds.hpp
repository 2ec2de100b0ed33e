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

namespace szne {

/// Sample threshold (64 B^2 M^2 / 3) (d e / Lambda)^(4 Lambda) log(1 / delta) / 9.
double sample_threshold(double norm_bound, double m, int d, int truncation, double delta);

/// Shot-noise contribution 4 L^2 u B^2 ln(40) / M.
double shot_noise_term(double lipschitz, int levels, double norm_bound, double shots);

/// zeta^2 + shot_noise_term(...).
double szne_error_bound(double zeta_sq, double lipschitz, int levels, double norm_bound, double shots);

struct KernelRequirements {
    double lambda_c;
    double lambda_p;
    int truncation;
    double frequency_count;
    double samples;
};

/// Kernel-surrogate requirement with Lambda = floor(min(Lambda_C, Lambda_p)) capped at d.
KernelRequirements kernel_surrogate_requirements(double norm_bound, int locality, int d, double gradient_bound, double p,
                                 double p_z, double epsilon, double delta);

struct RidgeRequirements {
    double samples;
    double epsilon;
    bool truncation_condition;
};

/// Regression-surrogate requirement; throws when q (1 + R) >= 1 / e.
RidgeRequirements ridge_surrogate_requirements(double norm_bound, int d, double q, double radius, int truncation, double delta);

}  // namespace szne
