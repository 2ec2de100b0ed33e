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

#include "szne/bounds.hpp"
#include "szne/extrapolation.hpp"

namespace szne {
namespace {

using std::numbers::e;

TEST(Bounds, SampleThresholdExample) {
    const double n = sample_threshold(1.0, 100.0, 2, 2, 0.05);
    // (64 / 3) * 1e4 * e^8 * ln(20) / 9 evaluated term by term.
    const double expect = 64.0 / 3.0 * 1e4 * std::exp(8.0) * std::log(20.0) / 9.0;
    EXPECT_NEAR(n / expect, 1.0, 1e-12);
    EXPECT_NEAR(n, 2.12e8, 0.01e8);
}

TEST(Bounds, SampleThresholdScaling) {
    const double base = sample_threshold(1.0, 10.0, 5, 2, 0.1);
    EXPECT_NEAR(sample_threshold(2.0, 10.0, 5, 2, 0.1) / base, 4.0, 1e-12);
    EXPECT_NEAR(sample_threshold(1.0, 20.0, 5, 2, 0.1) / base, 4.0, 1e-12);
    EXPECT_GT(sample_threshold(1.0, 10.0, 5, 2, 0.01), base);
}

TEST(Bounds, ShotNoiseExample) {
    const double l = lipschitz_constant(make_scheme(ExtrapolationKind::linear, {1, 2}));
    const double t = shot_noise_term(l, 2, 1.0, 1e6);
    EXPECT_NEAR(t, 4.0 * 5.0 * 2.0 * std::log(40.0) / 1e6, 1e-18);
    EXPECT_NEAR(t, 1.48e-4, 0.005e-4);
    EXPECT_NEAR(szne_error_bound(1e-3, l, 2, 1.0, 1e6), 1e-3 + t, 1e-18);
}

TEST(Bounds, KernelRequirements) {
    const double eps = 0.01;
    const KernelRequirements r = kernel_surrogate_requirements(1.0, 2, 10, 0.004, 0.1, 0.05, eps, 0.05);
    EXPECT_NEAR(r.lambda_c, 1.6, 1e-12);
    EXPECT_NEAR(r.lambda_p, std::log(2.0 / 0.1) / 0.3, 1e-12);
    EXPECT_EQ(r.truncation, 1);
    EXPECT_DOUBLE_EQ(r.frequency_count, 21.0);
    EXPECT_NEAR(r.samples / (21.0 * 2.0 * 81.0 / eps * std::log(2.0 * 21.0 / 0.05)), 1.0, 1e-12);
}

TEST(Bounds, KernelTruncationCappedAtDimension) {
    const KernelRequirements r = kernel_surrogate_requirements(1.0, 1, 3, 100.0, 0.0, 0.0, 0.01, 0.05);
    EXPECT_TRUE(std::isinf(r.lambda_p));
    EXPECT_EQ(r.truncation, 3);
    EXPECT_DOUBLE_EQ(r.frequency_count, 27.0);
}

TEST(Bounds, NonPositiveToleranceRejected) {
    EXPECT_THROW(kernel_surrogate_requirements(1.0, 2, 10, 1.0, 0.1, 0.1, 0.0, 0.05), std::invalid_argument);
    EXPECT_THROW(kernel_surrogate_requirements(1.0, 2, 10, 1.0, 0.1, 0.1, -1.0, 0.05), std::invalid_argument);
}

TEST(Bounds, RidgeRequirements) {
    const double q = 0.1;
    const double radius = 0.5;
    const RidgeRequirements r = ridge_surrogate_requirements(1.0, 2, q, radius, 2, 0.05);
    EXPECT_NEAR(r.samples / (std::pow(1.0 / 0.15, 8.0) * std::log(20.0) / 9.0), 1.0, 1e-12);
    EXPECT_NEAR(r.epsilon, 16.0 * std::pow(2.0 * e * 0.15 / 2.0, 4.0), 1e-12);
    EXPECT_TRUE(r.truncation_condition);
    EXPECT_FALSE(ridge_surrogate_requirements(1.0, 20, q, radius, 2, 0.05).truncation_condition);
}

TEST(Bounds, RidgeAssumptionViolated) {
    try {
        ridge_surrogate_requirements(1.0, 2, 0.3, 0.5, 2, 0.05);
        FAIL();
    } catch (const std::invalid_argument &err) {
        EXPECT_NE(std::string(err.what()).find("assumption violated"), std::string::npos);
    }
}

TEST(Bounds, InvalidInputs) {
    EXPECT_THROW(sample_threshold(0.0, 1.0, 1, 1, 0.1), std::invalid_argument);
    EXPECT_THROW(sample_threshold(1.0, 1.0, 1, 1, 1.5), std::invalid_argument);
    EXPECT_THROW(shot_noise_term(1.0, 2, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(szne_error_bound(-1.0, 1.0, 2, 1.0, 10.0), std::invalid_argument);
}

}  // namespace
}  // namespace szne
