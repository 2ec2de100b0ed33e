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

// Brute-force reference implementations built from full 2^N x 2^N matrices.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "szne/circuit.hpp"
#include "szne/noise.hpp"
#include "szne/observable.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli(szne::Pauli p) {
    Mat m(2, 2);
    switch (p) {
    case szne::Pauli::I:
        m << 1, 0, 0, 1;
        break;
    case szne::Pauli::X:
        m << 0, 1, 1, 0;
        break;
    case szne::Pauli::Y:
        m << 0, cplx(0, -1), cplx(0, 1), 0;
        break;
    case szne::Pauli::Z:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Embeds one-qubit operators; qubit q is bit q of the basis index, so qubit 0 is the rightmost factor.
inline Mat embed(int n, const std::vector<std::pair<int, Mat>> &ops) {
    Mat out = Mat::Identity(1, 1);
    for (int q = n - 1; q >= 0; --q) {
        Mat f = Mat::Identity(2, 2);
        for (const auto &[qq, m] : ops) {
            if (qq == q) {
                f = m;
            }
        }
        out = kron(out, f);
    }
    return out;
}

inline Mat gate_matrix(szne::GateKind k) {
    Mat m(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (k) {
    case szne::GateKind::H:
        m << r, r, r, -r;
        return m;
    case szne::GateKind::S:
        m << 1, 0, 0, cplx(0, 1);
        return m;
    case szne::GateKind::X:
        return pauli(szne::Pauli::X);
    case szne::GateKind::Y:
        return pauli(szne::Pauli::Y);
    case szne::GateKind::Z:
        return pauli(szne::Pauli::Z);
    default:
        return Mat::Identity(2, 2);
    }
}

inline Mat rz(double theta) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = std::exp(cplx(0, -theta / 2));
    m(1, 1) = std::exp(cplx(0, theta / 2));
    return m;
}

inline Mat cnot(int n, int c, int t) {
    Mat p0 = Mat::Zero(2, 2);
    p0(0, 0) = 1;
    Mat p1 = Mat::Zero(2, 2);
    p1(1, 1) = 1;
    return embed(n, {{c, p0}}) + embed(n, {{c, p1}, {t, pauli(szne::Pauli::X)}});
}

/// Full unitary of one primitive operation.
inline Mat op_unitary(int n, const szne::Op &op, std::span<const double> slot_angles) {
    if (op.is_rotation()) {
        return embed(n, {{op.q0, rz(slot_angles[op.slot])}});
    }
    if (op.kind == szne::GateKind::CNOT) {
        return cnot(n, op.q0, op.q1);
    }
    return embed(n, {{op.q0, gate_matrix(op.kind)}});
}

inline Mat observable_matrix(int n, const szne::Observable &o) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    Mat out = Mat::Zero(dim, dim);
    for (const szne::PauliTerm &t : o.terms()) {
        std::vector<std::pair<int, Mat>> ops;
        for (auto [q, p] : t.ops) {
            ops.emplace_back(q, pauli(p));
        }
        out += t.coefficient * embed(n, ops);
    }
    return out;
}

inline Vec statevector(const szne::ParamCircuit &c, std::span<const double> x) {
    const int n = c.qubit_count();
    const std::vector<double> angles = c.slot_angles(x);
    Vec psi = Vec::Zero(Eigen::Index(1) << n);
    psi(0) = 1;
    for (const szne::Op &op : szne::flatten(c)) {
        psi = op_unitary(n, op, angles) * psi;
    }
    return psi;
}

inline double expectation(const szne::ParamCircuit &c, std::span<const double> x, const szne::Observable &o) {
    const Vec psi = statevector(c, x);
    return (psi.adjoint() * observable_matrix(c.qubit_count(), o) * psi)(0, 0).real();
}

inline Mat apply_kraus(int n, const Mat &rho, const szne::KrausChannel &k, int q) {
    Mat out = Mat::Zero(rho.rows(), rho.cols());
    for (const Mat &op : k.operators) {
        const Mat full = embed(n, {{q, op}});
        out += full * rho * full.adjoint();
    }
    return out;
}

/// Noisy density matrix: per-gate local channels (repeated `lambda` times under channel repetition)
/// on every touched qubit, then global depolarizing with the amplified rate.
inline Mat noisy_density(const szne::ParamCircuit &c, std::span<const double> x, const szne::NoiseModel &noise,
                         int lambda) {
    const int n = c.qubit_count();
    const std::vector<double> angles = c.slot_angles(x);
    const Vec psi0 = [&] {
        Vec v = Vec::Zero(Eigen::Index(1) << n);
        v(0) = 1;
        return v;
    }();
    Mat rho = psi0 * psi0.adjoint();
    const int reps = noise.amplification == szne::Amplification::rate_formula ? 1 : lambda;
    const szne::KrausChannel k1 = szne::make_channel(noise, 1);
    const szne::KrausChannel k2 = szne::make_channel(noise, 2);
    for (const szne::Op &op : szne::flatten(c)) {
        const Mat u = op_unitary(n, op, angles);
        rho = u * rho * u.adjoint();
        const szne::KrausChannel &k = op.arity() == 2 ? k2 : k1;
        for (int r = 0; r < reps; ++r) {
            rho = apply_kraus(n, rho, k, op.q0);
            if (op.arity() == 2) {
                rho = apply_kraus(n, rho, k, op.q1);
            }
        }
    }
    if (auto g = noise.global()) {
        const double p = noise.amplification == szne::Amplification::rate_formula
                             ? 1.0 - std::pow(1.0 - g->p, lambda)
                             : 1.0 - std::pow(1.0 - g->p, reps);
        const Eigen::Index dim = rho.rows();
        rho = (1.0 - p) * rho + p * Mat::Identity(dim, dim) / static_cast<double>(dim);
    }
    return rho;
}

}  // namespace oracle
