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

#include "szne/states.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace szne {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const cplx kI(0.0, 1.0);

using Mat2 = std::array<cplx, 4>;

Mat2 gate_matrix(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
        case GateKind::S:
            return {1.0, 0.0, 0.0, kI};
        case GateKind::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -kI, kI, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::CNOT:
            break;
    }
    throw std::invalid_argument("not a single-qubit gate");
}

Superop superop_of_unitary(const Mat2 &u) {
    Superop s{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                for (int d = 0; d < 2; ++d) {
                    s[(2 * a + b) * 4 + (2 * c + d)] = u[2 * a + c] * std::conj(u[2 * b + d]);
                }
            }
        }
    }
    return s;
}

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) {
        throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
    }
}

}  // namespace

Superop superop_identity() {
    Superop s{};
    for (int i = 0; i < 4; ++i) {
        s[i * 5] = 1.0;
    }
    return s;
}

Superop superop_compose(const Superop &after, const Superop &before) {
    Superop out{};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            cplx a = after[i * 4 + k];
            if (a == 0.0) {
                continue;
            }
            for (int j = 0; j < 4; ++j) {
                out[i * 4 + j] += a * before[k * 4 + j];
            }
        }
    }
    return out;
}

Superop superop_power(const Superop &s, int k) {
    if (k < 0) {
        throw std::invalid_argument("negative superoperator power");
    }
    Superop out = superop_identity();
    Superop base = s;
    while (k > 0) {
        if (k & 1) {
            out = superop_compose(base, out);
        }
        base = superop_compose(base, base);
        k >>= 1;
    }
    return out;
}

Superop superop_of_gate(GateKind kind) { return superop_of_unitary(gate_matrix(kind)); }

Superop superop_of_rz(double theta) {
    Superop s{};
    s[0] = 1.0;
    s[5] = std::polar(1.0, -theta);
    s[10] = std::polar(1.0, theta);
    s[15] = 1.0;
    return s;
}

PauliAction::PauliAction(const PauliTerm &t) {
    for (const auto &[q, p] : t.ops) {
        std::uint64_t bit = std::uint64_t{1} << q;
        if (p == Pauli::X || p == Pauli::Y) {
            flip |= bit;
        }
        if (p == Pauli::Y || p == Pauli::Z) {
            sign |= bit;
        }
        if (p == Pauli::Y) {
            ++y_count;
        }
    }
}

cplx PauliAction::phase(std::uint64_t i) const {
    static const cplx kPowers[4] = {1.0, kI, -1.0, -kI};
    double s = (std::popcount(i & sign) & 1) ? -1.0 : 1.0;
    return s * kPowers[y_count & 3];
}

StateVector::StateVector(int n) : n_(n) {
    if (n < 1 || n > 30) {
        throw std::invalid_argument("statevector qubit count out of range");
    }
    amps_.assign(std::size_t{1} << n, 0.0);
    amps_[0] = 1.0;
}

void StateVector::apply(GateKind kind, int q0, int q1) {
    check_qubit(q0, n_);
    const std::size_t dim = amps_.size();
    if (kind == GateKind::CNOT) {
        check_qubit(q1, n_);
        const std::size_t c = std::size_t{1} << q0;
        const std::size_t t = std::size_t{1} << q1;
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & c) && !(i & t)) {
                std::swap(amps_[i], amps_[i | t]);
            }
        }
        return;
    }
    const Mat2 u = gate_matrix(kind);
    const std::size_t bit = std::size_t{1} << q0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) {
            continue;
        }
        cplx a = amps_[i];
        cplx b = amps_[i | bit];
        amps_[i] = u[0] * a + u[1] * b;
        amps_[i | bit] = u[2] * a + u[3] * b;
    }
}

void StateVector::apply_rz(int q, double theta) {
    check_qubit(q, n_);
    const cplx p0 = std::polar(1.0, -theta / 2);
    const cplx p1 = std::polar(1.0, theta / 2);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] *= (i & bit) ? p1 : p0;
    }
}

double StateVector::expectation(const PauliTerm &t) const {
    if (t.ops.empty()) {
        return t.coefficient;
    }
    if (t.ops.back().first >= n_) {
        throw std::invalid_argument("observable acts outside the register");
    }
    PauliAction act(t);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += std::conj(amps_[i ^ act.flip]) * act.phase(i) * amps_[i];
    }
    return t.coefficient * acc.real();
}

double StateVector::expectation(const Observable &o) const {
    double v = 0.0;
    for (const PauliTerm &t : o.terms()) {
        v += expectation(t);
    }
    return v;
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const cplx &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

DensityMatrix::DensityMatrix(int n) : n_(n) {
    if (n < 1 || n > 14) {
        throw std::invalid_argument("density matrix qubit count out of range");
    }
    dim_ = std::size_t{1} << n;
    rho_.assign(dim_ * dim_, 0.0);
    rho_[0] = 1.0;
}

void DensityMatrix::apply(const Superop &s, int q) {
    check_qubit(q, n_);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t r = 0; r < dim_; ++r) {
        if (r & bit) {
            continue;
        }
        cplx *row0 = &rho_[r * dim_];
        cplx *row1 = &rho_[(r | bit) * dim_];
        for (std::size_t c = 0; c < dim_; ++c) {
            if (c & bit) {
                continue;
            }
            const std::size_t c1 = c | bit;
            const cplx v0 = row0[c], v1 = row0[c1], v2 = row1[c], v3 = row1[c1];
            row0[c] = s[0] * v0 + s[1] * v1 + s[2] * v2 + s[3] * v3;
            row0[c1] = s[4] * v0 + s[5] * v1 + s[6] * v2 + s[7] * v3;
            row1[c] = s[8] * v0 + s[9] * v1 + s[10] * v2 + s[11] * v3;
            row1[c1] = s[12] * v0 + s[13] * v1 + s[14] * v2 + s[15] * v3;
        }
    }
}

void DensityMatrix::apply_cnot(int control, int target) {
    check_qubit(control, n_);
    check_qubit(target, n_);
    const std::size_t cb = std::size_t{1} << control;
    const std::size_t tb = std::size_t{1} << target;
    auto perm = [&](std::size_t i) { return (i & cb) ? (i ^ tb) : i; };
    // Swap rows, then columns; the permutation is an involution.
    for (std::size_t r = 0; r < dim_; ++r) {
        std::size_t pr = perm(r);
        if (pr > r) {
            std::swap_ranges(&rho_[r * dim_], &rho_[r * dim_] + dim_, &rho_[pr * dim_]);
        }
    }
    for (std::size_t r = 0; r < dim_; ++r) {
        cplx *row = &rho_[r * dim_];
        for (std::size_t c = 0; c < dim_; ++c) {
            std::size_t pc = perm(c);
            if (pc > c) {
                std::swap(row[c], row[pc]);
            }
        }
    }
}

void DensityMatrix::apply_global_depolarizing(double p) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("depolarizing rate outside [0, 1]");
    }
    for (cplx &v : rho_) {
        v *= 1.0 - p;
    }
    const double add = p / static_cast<double>(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        rho_[i * dim_ + i] += add;
    }
}

double DensityMatrix::expectation(const PauliTerm &t) const {
    if (t.ops.empty()) {
        return t.coefficient * trace();
    }
    if (t.ops.back().first >= n_) {
        throw std::invalid_argument("observable acts outside the register");
    }
    PauliAction act(t);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        acc += rho_[i * dim_ + (i ^ act.flip)] * act.phase(i);
    }
    return t.coefficient * acc.real();
}

double DensityMatrix::expectation(const Observable &o) const {
    double v = 0.0;
    for (const PauliTerm &t : o.terms()) {
        v += expectation(t);
    }
    return v;
}

double DensityMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += rho_[i * dim_ + i].real();
    }
    return t;
}

double DensityMatrix::hermiticity_error() const {
    double e = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            e = std::max(e, std::abs(rho_[r * dim_ + c] - std::conj(rho_[c * dim_ + r])));
        }
    }
    return e;
}

std::vector<double> DensityMatrix::pauli_expectations() const {
    // Per qubit, map the (row bit, column bit) block (a, b, c, d) = (00, 01, 10, 11)
    // to (Tr rho, Tr rho X, Tr rho Y, Tr rho Z) = (a + d, b + c, i(b - c), a - d).
    std::vector<cplx> w = rho_;
    for (int q = 0; q < n_; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t r = 0; r < dim_; ++r) {
            if (r & bit) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                if (c & bit) {
                    continue;
                }
                cplx &a = w[r * dim_ + c];
                cplx &b = w[r * dim_ + (c | bit)];
                cplx &cc = w[(r | bit) * dim_ + c];
                cplx &d = w[(r | bit) * dim_ + (c | bit)];
                const cplx va = a, vb = b, vc = cc, vd = d;
                a = va + vd;
                b = vb + vc;
                cc = kI * (vb - vc);
                d = va - vd;
            }
        }
    }
    std::vector<double> out(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            std::size_t index = 0;
            std::size_t scale = 1;
            for (int q = 0; q < n_; ++q, scale *= 4) {
                index += scale * (2 * ((r >> q) & 1) + ((c >> q) & 1));
            }
            out[index] = w[r * dim_ + c].real();
        }
    }
    return out;
}

}  // namespace szne
