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

#include "szne/hamiltonian.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "szne/random.hpp"
#include "szne/states.hpp"

namespace szne {

namespace {

using cplx = std::complex<double>;

void check_register(const Observable &o, int n, int limit) {
    if (n < 1 || o.max_qubit() >= n) {
        throw std::invalid_argument("observable does not fit the register");
    }
    if (n > limit) {
        throw std::invalid_argument("exact solver unavailable");
    }
}

/// out = H in, matrix-free over the Pauli terms.
void apply_pauli_sum(const std::vector<std::pair<double, PauliAction>> &terms, const Eigen::VectorXcd &in,
                     Eigen::VectorXcd &out) {
    out.setZero();
    const std::uint64_t dim = static_cast<std::uint64_t>(in.size());
    for (const auto &[c, a] : terms) {
        for (std::uint64_t i = 0; i < dim; ++i) {
            out[static_cast<Eigen::Index>(i ^ a.flip)] += c * a.phase(i) * in[static_cast<Eigen::Index>(i)];
        }
    }
}

std::vector<std::pair<double, PauliAction>> actions(const Observable &o) {
    std::vector<std::pair<double, PauliAction>> out;
    for (const PauliTerm &t : o.terms()) {
        out.emplace_back(t.coefficient, PauliAction(t));
    }
    return out;
}

}  // namespace

const char *hamiltonian_model_name(HamiltonianModel m) { return m == HamiltonianModel::tfim ? "tfim" : "heisenberg"; }

HamiltonianModel parse_hamiltonian_model(const std::string &name) {
    if (name == "tfim") {
        return HamiltonianModel::tfim;
    }
    if (name == "heisenberg" || name == "hm") {
        return HamiltonianModel::heisenberg;
    }
    throw std::invalid_argument("unknown model: " + name);
}

Hamiltonian build_hamiltonian(HamiltonianModel model, int n, const Couplings &couplings) {
    if (n < 2) {
        throw std::invalid_argument("chain too short");
    }
    std::vector<PauliTerm> terms;
    auto bond = [&](double c, Pauli p) {
        if (c == 0.0) {
            return;
        }
        for (int i = 0; i + 1 < n; ++i) {
            terms.push_back({c, {{i, p}, {i + 1, p}}});
        }
    };
    switch (model) {
    case HamiltonianModel::tfim:
        bond(-couplings.j, Pauli::Z);
        if (couplings.h != 0.0) {
            for (int i = 0; i < n; ++i) {
                terms.push_back({-couplings.h, {{i, Pauli::X}}});
            }
        }
        break;
    case HamiltonianModel::heisenberg:
        bond(couplings.jx, Pauli::X);
        bond(couplings.jy, Pauli::Y);
        bond(couplings.jz, Pauli::Z);
        break;
    default:
        throw std::invalid_argument("unknown model");
    }
    return {model, n, couplings, Observable(std::move(terms))};
}

double dense_ground_energy(const Observable &o, int n) {
    check_register(o, n, kDenseSolverLimit);
    const Eigen::Index dim = Eigen::Index(1) << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (const PauliTerm &t : o.terms()) {
        const PauliAction a(t);
        for (Eigen::Index i = 0; i < dim; ++i) {
            h(static_cast<Eigen::Index>(static_cast<std::uint64_t>(i) ^ a.flip), i) +=
                t.coefficient * a.phase(static_cast<std::uint64_t>(i));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

double lanczos_ground_energy(const Observable &o, int n) {
    check_register(o, n, kLanczosSolverLimit);
    const Eigen::Index dim = Eigen::Index(1) << n;
    const auto terms = actions(o);
    const int max_steps = static_cast<int>(std::min<Eigen::Index>(dim, 300));
    std::vector<Eigen::VectorXcd> basis;
    std::vector<double> alpha;
    std::vector<double> beta;
    Rng rng(0x5eed);
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v[i] = cplx(g(rng), g(rng));
    }
    v.normalize();
    Eigen::VectorXcd w(dim);
    double previous = std::numeric_limits<double>::infinity();
    double lowest = previous;
    for (int k = 0; k < max_steps; ++k) {
        basis.push_back(v);
        apply_pauli_sum(terms, v, w);
        alpha.push_back(v.dot(w).real());
        for (const Eigen::VectorXcd &b : basis) {
            w -= b * b.dot(w);
        }
        for (const Eigen::VectorXcd &b : basis) {
            w -= b * b.dot(w);
        }
        const int m = static_cast<int>(alpha.size());
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
        Eigen::VectorXd off = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1))
                                    : Eigen::VectorXd();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
        lowest = es.eigenvalues()(0);
        const double b = w.norm();
        if (b < 1e-12 || std::abs(lowest - previous) < 1e-13) {
            break;
        }
        previous = lowest;
        beta.push_back(b);
        v = w / b;
    }
    return lowest;
}

double tfim_free_fermion_energy(int n, double j, double h) {
    if (n < 2) {
        throw std::invalid_argument("chain too short");
    }
    // Bogoliubov form of -J sum X_i X_{i+1} - h sum Z_i (unitarily equivalent to the Z-coupled chain).
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = 2.0 * h;
    }
    for (int i = 0; i + 1 < n; ++i) {
        a(i, i + 1) = -j;
        a(i + 1, i) = -j;
        b(i, i + 1) = -j;
        b(i + 1, i) = j;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a - b);
    return -0.5 * svd.singularValues().sum();
}

double exact_ground_energy(const Hamiltonian &h) {
    if (h.model == HamiltonianModel::tfim) {
        return tfim_free_fermion_energy(h.n, h.couplings.j, h.couplings.h);
    }
    if (h.n <= kDenseSolverLimit) {
        return dense_ground_energy(h.observable, h.n);
    }
    return lanczos_ground_energy(h.observable, h.n);
}

}  // namespace szne
