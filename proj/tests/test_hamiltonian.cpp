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

#include "oracle.hpp"
#include "szne/hamiltonian.hpp"

namespace szne {
namespace {

int count_terms(const Observable &o, Pauli p) {
    int c = 0;
    for (const PauliTerm &t : o.terms()) {
        c += t.ops.size() == 2 && t.ops[0].second == p && t.ops[1].second == p;
    }
    return c;
}

TEST(Hamiltonian, TfimTwoSites) {
    const Hamiltonian h = build_hamiltonian(HamiltonianModel::tfim, 2, {0.1, 0.5});
    EXPECT_EQ(h.observable.terms().size(), 3u);
    EXPECT_EQ(count_terms(h.observable, Pauli::Z), 1);
    EXPECT_NEAR(h.observable.norm_bound(), 1.1, 1e-15);
    EXPECT_NEAR(exact_ground_energy(h), -std::sqrt(0.01 + 4 * 0.25), 1e-12);
}

TEST(Hamiltonian, HeisenbergTerms) {
    const Hamiltonian h = build_hamiltonian(HamiltonianModel::heisenberg, 3, {0.1, 0.5, 0.1, 0.5, 0.0});
    EXPECT_EQ(h.observable.terms().size(), 4u);
    EXPECT_EQ(count_terms(h.observable, Pauli::X), 2);
    EXPECT_EQ(count_terms(h.observable, Pauli::Y), 2);
    EXPECT_EQ(count_terms(h.observable, Pauli::Z), 0);
    EXPECT_NEAR(h.observable.norm_bound(), 1.2, 1e-15);
}

TEST(Hamiltonian, TfimHundredSites) {
    const Hamiltonian h = build_hamiltonian(HamiltonianModel::tfim, 100, {0.1, 0.5});
    EXPECT_EQ(h.observable.terms().size(), 199u);
    EXPECT_EQ(count_terms(h.observable, Pauli::Z), 99);
    EXPECT_NEAR(exact_ground_energy(h), -50.50, 0.005);
}

TEST(Hamiltonian, MatchesMatrixOracle) {
    const Hamiltonian h = build_hamiltonian(HamiltonianModel::tfim, 4, {0.3, 0.7});
    oracle::Mat expect = oracle::Mat::Zero(16, 16);
    for (int i = 0; i + 1 < 4; ++i) {
        expect -= 0.3 * oracle::embed(4, {{i, oracle::pauli(Pauli::Z)}, {i + 1, oracle::pauli(Pauli::Z)}});
    }
    for (int i = 0; i < 4; ++i) {
        expect -= 0.7 * oracle::embed(4, {{i, oracle::pauli(Pauli::X)}});
    }
    EXPECT_LT((oracle::observable_matrix(4, h.observable) - expect).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Hamiltonian, DecoupledSpins) {
    for (int n : {2, 5, 9, 40}) {
        EXPECT_NEAR(exact_ground_energy(build_hamiltonian(HamiltonianModel::tfim, n, {0.0, 0.5})), -0.5 * n, 1e-10);
    }
    EXPECT_NEAR(dense_ground_energy(build_hamiltonian(HamiltonianModel::tfim, 5, {0.0, 0.5}).observable, 5), -2.5,
                1e-10);
}

TEST(Hamiltonian, SolversAgree) {
    for (int n = 2; n <= kLanczosSolverLimit; ++n) {
        const Hamiltonian h = build_hamiltonian(HamiltonianModel::tfim, n, {0.1, 0.5});
        const double ff = tfim_free_fermion_energy(n, 0.1, 0.5);
        if (n <= kDenseSolverLimit) {
            EXPECT_NEAR(dense_ground_energy(h.observable, n), ff, 1e-8) << "n=" << n;
        }
        EXPECT_NEAR(lanczos_ground_energy(h.observable, n), ff, 1e-8) << "n=" << n;
    }
}

TEST(Hamiltonian, HeisenbergDenseVsLanczos) {
    for (int n : {3, 6, 9}) {
        const Observable o = build_hamiltonian(HamiltonianModel::heisenberg, n, {0.1, 0.5, 0.1, 0.5, 0.2}).observable;
        EXPECT_NEAR(dense_ground_energy(o, n), lanczos_ground_energy(o, n), 1e-8);
        Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::observable_matrix(n, o));
        EXPECT_NEAR(dense_ground_energy(o, n), es.eigenvalues().minCoeff(), 1e-10);
    }
}

TEST(Hamiltonian, Errors) {
    try {
        exact_ground_energy(build_hamiltonian(HamiltonianModel::heisenberg, 15, {}));
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("exact solver unavailable"), std::string::npos);
    }
    EXPECT_THROW(build_hamiltonian(HamiltonianModel::tfim, 1, {}), std::invalid_argument);
    EXPECT_THROW(parse_hamiltonian_model("xyz"), std::invalid_argument);
    EXPECT_EQ(parse_hamiltonian_model("hm"), HamiltonianModel::heisenberg);
    EXPECT_EQ(parse_hamiltonian_model(hamiltonian_model_name(HamiltonianModel::tfim)), HamiltonianModel::tfim);
}

}  // namespace
}  // namespace szne
