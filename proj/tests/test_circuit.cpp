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

#include "oracle.hpp"
#include "szne/circuit.hpp"
#include "szne/simulator.hpp"

namespace szne {
namespace {

using std::numbers::pi;

TEST(BuildCircuit, SingleRotation) {
    const ParamCircuit c = build_circuit(1, {{"RZ", {0}, 0}});
    EXPECT_EQ(c.qubit_count(), 1);
    EXPECT_EQ(c.slot_count(), 1);
    EXPECT_EQ(c.group_count(), 1);
    EXPECT_EQ(c.layers().size(), 1u);
    EXPECT_EQ(c.fold_factor(), 1);
}

TEST(BuildCircuit, RejectsUnsupportedGate) {
    try {
        build_circuit(1, {{"T", {0}}});
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("unsupported gate"), std::string::npos);
    }
}

TEST(BuildCircuit, RejectsSlotCollision) {
    try {
        build_circuit(2, {{"RZ", {0}, 0}, {"RZ", {1}, 0}});
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("slot collision"), std::string::npos);
    }
}

TEST(BuildCircuit, RejectsOutOfRangeQubit) {
    EXPECT_THROW(build_circuit(2, {{"H", {2}}}), std::invalid_argument);
    EXPECT_THROW(build_circuit(2, {{"CNOT", {0, 5}}}), std::invalid_argument);
    EXPECT_THROW(build_circuit(2, {{"CNOT", {1, 1}}}), std::invalid_argument);
}

TEST(BuildCircuit, GroupMapSharesValues) {
    const ParamCircuit c = build_circuit(2, {{"RZ", {0}, 0}, {"RZ", {1}, 1}}, {0, 0});
    EXPECT_EQ(c.group_count(), 1);
    const double x[] = {0.7};
    EXPECT_EQ(c.slot_angles(x), (std::vector<double>{0.7, 0.7}));
}

TEST(BuildCircuit, MatchesMatrixOracle) {
    const ParamCircuit c = build_circuit(
        3, {{"H", {0}}, {"S", {1}}, {"CNOT", {0, 2}}, {"RZ", {2}, 0}, {"Y", {1}}, {"X", {0}}, {"RZ", {0}, 1},
            {"Z", {2}}, {"CNOT", {2, 1}}, {"RZ", {1}, 2}, {"H", {2}}});
    const Observable o = Observable::from_labels({{0.3, "X0 Y1"}, {-0.8, "Z1 Z2"}, {0.5, "Y0 X2"}, {0.2, "Z0"}});
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-pi, pi);
    for (int t = 0; t < 20; ++t) {
        const double x[] = {u(rng), u(rng), u(rng)};
        EXPECT_NEAR(ideal_expectation(c, x, o), oracle::expectation(c, x, o), 1e-12);
    }
}

TEST(BuildHva, TfimTwoQubitGroups) {
    const ParamCircuit c = build_hva(HvaModel::tfim, 2, 1);
    EXPECT_EQ(c.group_count(), 2);
    EXPECT_EQ(c.group_sizes(), (std::vector<int>{1, 2}));
}

TEST(BuildHva, HeisenbergThreeQubitGroups) {
    const ParamCircuit c = build_hva(HvaModel::heisenberg, 3, 1);
    EXPECT_EQ(c.group_count(), 2);
    EXPECT_EQ(c.group_sizes(), (std::vector<int>{2, 2}));
}

TEST(BuildHva, TfimHundredQubitGroupSizes) {
    const ParamCircuit c = build_hva(HvaModel::tfim, 100, 1);
    EXPECT_EQ(c.group_sizes(), (std::vector<int>{99, 100}));
}

TEST(BuildHva, LayersMultiplyGroups) {
    const ParamCircuit c = build_hva(HvaModel::tfim, 4, 3);
    EXPECT_EQ(c.group_count(), 6);
}

TEST(BuildHva, ChainTooShort) {
    try {
        build_hva(HvaModel::tfim, 1, 1);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("chain too short"), std::string::npos);
    }
}

TEST(BuildHva, ZeroParametersEqualHadamardLayer) {
    for (HvaModel m : {HvaModel::tfim, HvaModel::heisenberg}) {
        const ParamCircuit c = build_hva(m, 4, 2);
        const std::vector<double> zero(c.group_count(), 0.0);
        const oracle::Vec psi = oracle::statevector(c, zero);
        const oracle::Vec plus = oracle::Vec::Constant(16, 0.25);
        EXPECT_NEAR(std::abs(plus.dot(psi)), 1.0, 1e-12);
    }
}

TEST(BuildHva, ImplementsPauliExponentials) {
    // Reference: H^N then exp(-i a/2 sum ZZ) then exp(-i b/2 sum X), from matrix exponentials.
    const int n = 3;
    const ParamCircuit c = build_hva(HvaModel::tfim, n, 1);
    const double a = 0.37;
    const double b = -1.21;
    oracle::Vec psi = oracle::Vec::Constant(8, 1.0 / std::sqrt(8.0));
    auto rot = [&](const oracle::Mat &p, double angle) {
        return oracle::Mat(std::cos(angle / 2) * oracle::Mat::Identity(8, 8) -
                           oracle::cplx(0, std::sin(angle / 2)) * p);
    };
    const oracle::Mat z = oracle::pauli(Pauli::Z);
    const oracle::Mat xm = oracle::pauli(Pauli::X);
    for (int i = 0; i + 1 < n; ++i) {
        psi = rot(oracle::embed(n, {{i, z}, {i + 1, z}}), a) * psi;
    }
    for (int i = 0; i < n; ++i) {
        psi = rot(oracle::embed(n, {{i, xm}}), b) * psi;
    }
    const double x[] = {a, b};
    const oracle::Vec got = oracle::statevector(c, x);
    EXPECT_NEAR(std::abs(psi.dot(got)), 1.0, 1e-12);
}

TEST(BuildHva, HeisenbergImplementsPauliExponentials) {
    const int n = 3;
    const ParamCircuit c = build_hva(HvaModel::heisenberg, n, 1);
    const double a = 0.9;
    const double b = 0.4;
    oracle::Vec psi = oracle::Vec::Constant(8, 1.0 / std::sqrt(8.0));
    auto rot = [&](const oracle::Mat &p, double angle) {
        return oracle::Mat(std::cos(angle / 2) * oracle::Mat::Identity(8, 8) -
                           oracle::cplx(0, std::sin(angle / 2)) * p);
    };
    const oracle::Mat xm = oracle::pauli(Pauli::X);
    const oracle::Mat ym = oracle::pauli(Pauli::Y);
    // Even bonds first, then odd bonds (all bonds commute within a block).
    for (int i = 0; i + 1 < n; ++i) {
        psi = rot(oracle::embed(n, {{i, xm}, {i + 1, xm}}), a) * psi;
    }
    for (int i = 0; i + 1 < n; ++i) {
        psi = rot(oracle::embed(n, {{i, ym}, {i + 1, ym}}), b) * psi;
    }
    const double x[] = {a, b};
    EXPECT_NEAR(std::abs(psi.dot(oracle::statevector(c, x))), 1.0, 1e-12);
}

TEST(BuildGhz, SingleQubitRamsey) {
    const ParamCircuit c = build_ghz_probe(1);
    const Observable z = Observable::from_labels({{1.0, "Z0"}});
    for (double x : {0.0, 0.3, 1.7, -2.2}) {
        const double xs[] = {x};
        EXPECT_NEAR(ideal_expectation(c, xs, z), std::cos(x), 1e-12);
    }
}

TEST(BuildGhz, TwoQubitsAtQuarterPi) {
    const ParamCircuit c = build_ghz_probe(2);
    const double x[] = {pi / 4};
    EXPECT_NEAR(ideal_expectation(c, x, Observable::from_labels({{1.0, "Z0 Z1"}})), 0.0, 1e-12);
}

TEST(BuildGhz, SignalIsCosNx) {
    for (int n : {3, 5, 8}) {
        const ParamCircuit c = build_ghz_probe(n);
        std::vector<std::pair<double, std::string>> label = {{1.0, ""}};
        for (int q = 0; q < n; ++q) {
            label[0].second += (q ? " Z" : "Z") + std::to_string(q);
        }
        const Observable o = Observable::from_labels(label);
        EXPECT_EQ(c.group_count(), 1);
        EXPECT_EQ(c.group_sizes(), (std::vector<int>{n}));
        for (double x : {0.1, 0.77, -1.3}) {
            const double xs[] = {x};
            EXPECT_NEAR(ideal_expectation(c, xs, o), std::cos(n * x), 1e-12);
        }
    }
}

TEST(FoldCircuit, IdentityAtLevelOne) {
    const ParamCircuit c = build_hva(HvaModel::tfim, 3, 1);
    EXPECT_EQ(fold_circuit(c, 1, FoldMode::independent), c);
    EXPECT_EQ(fold_circuit(c, 1, FoldMode::correlated), c);
}

TEST(FoldCircuit, IndependentModeFreshGroups) {
    const ParamCircuit c = build_circuit(1, {{"H", {0}}, {"RZ", {0}, 0}, {"H", {0}}, {"RZ", {0}, 1}});
    const ParamCircuit f = fold_circuit(c, 3, FoldMode::independent);
    EXPECT_EQ(f.slot_count(), 6);
    EXPECT_EQ(f.group_count(), 6);
    EXPECT_EQ(f.fold_factor(), 3);
}

TEST(FoldCircuit, CorrelatedModeSharedGroups) {
    const ParamCircuit c = build_circuit(1, {{"H", {0}}, {"RZ", {0}, 0}, {"H", {0}}, {"RZ", {0}, 1}});
    const ParamCircuit f = fold_circuit(c, 3, FoldMode::correlated);
    EXPECT_EQ(f.slot_count(), 6);
    EXPECT_EQ(f.group_count(), 2);
    EXPECT_EQ(f.group_sizes(), (std::vector<int>{3, 3}));
}

TEST(FoldCircuit, GroupCountProperty) {
    for (int lambda = 1; lambda <= 5; ++lambda) {
        for (const ParamCircuit &c : {build_hea(3, 2), build_hva(HvaModel::heisenberg, 4, 2), build_ghz_probe(3)}) {
            EXPECT_EQ(fold_circuit(c, lambda, FoldMode::independent).group_count(), lambda * c.group_count());
            EXPECT_EQ(fold_circuit(c, lambda, FoldMode::correlated).group_count(), c.group_count());
            EXPECT_EQ(fold_circuit(c, lambda, FoldMode::independent).slot_count(), lambda * c.slot_count());
        }
    }
}

TEST(FoldCircuit, RepeatsTheBody) {
    const ParamCircuit c = build_hea(2, 1);
    const ParamCircuit f = fold_circuit(c, 2, FoldMode::correlated);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-pi, pi);
    std::vector<double> x(c.group_count());
    for (double &v : x) {
        v = u(rng);
    }
    const oracle::Vec once = oracle::statevector(c, x);
    // U applied twice: rebuild U as a matrix from the single-copy state map on the basis.
    const ParamCircuit twice = f;
    const oracle::Vec got = oracle::statevector(twice, x);
    oracle::Mat u_full = oracle::Mat::Identity(4, 4);
    const std::vector<double> angles = c.slot_angles(x);
    for (const Op &op : flatten(c)) {
        u_full = oracle::op_unitary(2, op, angles) * u_full;
    }
    EXPECT_NEAR(std::abs((u_full * once).dot(got)), 1.0, 1e-12);
}

TEST(FoldCircuit, InvalidFactor) {
    const ParamCircuit c = build_ghz_probe(2);
    try {
        fold_circuit(c, 0, FoldMode::correlated);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("invalid fold factor"), std::string::npos);
    }
    EXPECT_THROW(fold_circuit(fold_circuit(c, 2, FoldMode::correlated), 2, FoldMode::correlated),
                 std::invalid_argument);
}

TEST(ParamCircuit, SlotAnglesSizeMismatch) {
    const ParamCircuit c = build_hva(HvaModel::tfim, 3, 1);
    const double x[] = {0.1};
    EXPECT_THROW(c.slot_angles(x), std::invalid_argument);
}

TEST(BuildHea, IndependentGroups) {
    const ParamCircuit c = build_hea(6, 2);
    EXPECT_EQ(c.group_count(), 24);
    EXPECT_EQ(c.group_sizes(), std::vector<int>(24, 1));
}

}  // namespace
}  // namespace szne
