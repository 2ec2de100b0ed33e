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

#include "szne/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace szne {

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

Eigen::Matrix2cd pauli_matrix(int k) {
    Eigen::Matrix2cd m;
    const cplx i(0.0, 1.0);
    switch (k) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, -i, i, 0;
            break;
        default:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

KrausChannel compose(const KrausChannel &after, const KrausChannel &before) {
    KrausChannel out;
    for (const auto &a : after.operators) {
        for (const auto &b : before.operators) {
            out.operators.push_back(a * b);
        }
    }
    return out;
}

KrausChannel identity_channel() { return {{Eigen::Matrix2cd::Identity()}}; }

}  // namespace

NoiseModel NoiseModel::global_depolarizing(double p) {
    NoiseModel m;
    m.components.push_back(GlobalDepolarizing{p});
    m.amplification = Amplification::rate_formula;
    return m;
}

void NoiseModel::validate() const {
    for (const NoiseComponent &c : components) {
        if (const auto *d = std::get_if<LocalDepolarizing>(&c)) {
            check_probability(d->p1, "single-qubit depolarizing rate");
            check_probability(d->p2, "two-qubit depolarizing rate");
        } else if (const auto *g = std::get_if<GlobalDepolarizing>(&c)) {
            check_probability(g->p, "global depolarizing rate");
        } else if (const auto *t = std::get_if<Thermal>(&c)) {
            if (!(t->t1 > 0.0 && t->t2 > 0.0 && t->gate_time_1q > 0.0 && t->gate_time_2q > 0.0)) {
                throw std::invalid_argument("thermal times must be positive");
            }
            check_probability(t->excited_population, "excited-state population");
        } else if (const auto *o = std::get_if<Coherent>(&c)) {
            if (!(std::isfinite(o->low) && std::isfinite(o->high) && o->low <= o->high)) {
                throw std::invalid_argument("coherent offset bounds must be finite and ordered");
            }
        }
    }
}

bool NoiseModel::has_local_channels() const {
    for (const NoiseComponent &c : components) {
        if (std::holds_alternative<LocalDepolarizing>(c) || std::holds_alternative<Thermal>(c)) {
            return true;
        }
    }
    return false;
}

std::optional<GlobalDepolarizing> NoiseModel::global() const {
    std::optional<GlobalDepolarizing> out;
    for (const NoiseComponent &c : components) {
        if (const auto *g = std::get_if<GlobalDepolarizing>(&c)) {
            // Successive global channels compose multiplicatively in (1 - p).
            double keep = (out ? 1.0 - out->p : 1.0) * (1.0 - g->p);
            out = GlobalDepolarizing{1.0 - keep};
        }
    }
    return out;
}

std::optional<Coherent> NoiseModel::coherent() const {
    for (const NoiseComponent &c : components) {
        if (const auto *o = std::get_if<Coherent>(&c)) {
            return *o;
        }
    }
    return std::nullopt;
}

double KrausChannel::completeness_error() const {
    if (operators.empty()) {
        return 1.0;
    }
    const auto n = operators.front().rows();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
    for (const auto &k : operators) {
        acc += k.adjoint() * k;
    }
    return (acc - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

KrausChannel depolarizing_channel(double p) {
    check_probability(p, "depolarizing rate");
    if (p == 0.0) {
        return identity_channel();
    }
    KrausChannel k;
    k.operators.push_back(std::sqrt(1.0 - 0.75 * p) * pauli_matrix(0));
    for (int i = 1; i < 4; ++i) {
        k.operators.push_back(std::sqrt(0.25 * p) * pauli_matrix(i));
    }
    return k;
}

Eigen::Matrix4cd thermal_choi(const Thermal &t, double gate_time) {
    const double pr = 1.0 - std::exp(-gate_time / t.t1);
    const double pe = t.excited_population;
    const double coh = std::exp(-gate_time / t.t2);
    Eigen::Matrix4cd choi = Eigen::Matrix4cd::Zero();
    choi(0, 0) = 1.0 - pe * pr;
    choi(1, 1) = pe * pr;
    choi(2, 2) = (1.0 - pe) * pr;
    choi(3, 3) = 1.0 - (1.0 - pe) * pr;
    choi(0, 3) = coh;
    choi(3, 0) = coh;
    return choi;
}

KrausChannel thermal_channel(const Thermal &t, double gate_time) {
    if (!(t.t1 > 0.0 && t.t2 > 0.0 && gate_time >= 0.0)) {
        throw std::invalid_argument("thermal times must be positive");
    }
    check_probability(t.excited_population, "excited-state population");
    const double inv_tphi = 1.0 / t.t2 - 1.0 / (2.0 * t.t1);
    if (inv_tphi < 0.0) {
        throw std::invalid_argument("inconsistent relaxation times");
    }
    if (gate_time == 0.0) {
        return identity_channel();
    }
    if (t.t1 < t.t2) {
        return kraus_from_choi(thermal_choi(t, gate_time));
    }
    const double pr = 1.0 - std::exp(-gate_time / t.t1);
    const double pz = 0.5 * (1.0 - std::exp(-gate_time * inv_tphi));
    const double pe = t.excited_population;
    if (pz + pr > 1.0) {
        throw std::invalid_argument("inconsistent relaxation times");
    }
    KrausChannel k;
    auto push = [&](double w, int r, int c) {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        m(r, c) = std::sqrt(w);
        k.operators.push_back(m);
    };
    k.operators.push_back(std::sqrt(1.0 - pz - pr) * pauli_matrix(0));
    k.operators.push_back(std::sqrt(pz) * pauli_matrix(3));
    push(pr * (1.0 - pe), 0, 0);
    push(pr * (1.0 - pe), 0, 1);
    push(pr * pe, 1, 0);
    push(pr * pe, 1, 1);
    return k;
}

KrausChannel kraus_from_choi(const Eigen::Matrix4cd &choi, double cutoff) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(choi);
    KrausChannel k;
    for (int j = 0; j < 4; ++j) {
        const double mu = eig.eigenvalues()(j);
        if (mu < cutoff) {
            continue;
        }
        Eigen::Vector4cd v = eig.eigenvectors().col(j);
        Eigen::Matrix2cd m;
        for (int in = 0; in < 2; ++in) {
            for (int out = 0; out < 2; ++out) {
                m(out, in) = std::sqrt(mu) * v(2 * in + out);
            }
        }
        k.operators.push_back(m);
    }
    return k;
}

Eigen::Matrix4cd choi_of(const KrausChannel &k) {
    Eigen::Matrix4cd choi = Eigen::Matrix4cd::Zero();
    for (const auto &op : k.operators) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        choi(2 * i + a, 2 * j + b) += op(a, i) * std::conj(op(b, j));
                    }
                }
            }
        }
    }
    return choi;
}

KrausChannel make_channel(const NoiseModel &noise, int gate_arity) {
    if (gate_arity != 1 && gate_arity != 2) {
        throw std::invalid_argument("gate arity must be 1 or 2");
    }
    noise.validate();
    KrausChannel out = identity_channel();
    for (const NoiseComponent &c : noise.components) {
        if (const auto *d = std::get_if<LocalDepolarizing>(&c)) {
            out = compose(depolarizing_channel(gate_arity == 1 ? d->p1 : d->p2), out);
        } else if (const auto *t = std::get_if<Thermal>(&c)) {
            out = compose(thermal_channel(*t, gate_arity == 1 ? t->gate_time_1q : t->gate_time_2q), out);
        }
    }
    return out;
}

Superop superop_of(const KrausChannel &k) {
    Superop s{};
    for (const auto &op : k.operators) {
        if (op.rows() != 2 || op.cols() != 2) {
            throw std::invalid_argument("superoperator conversion needs a single-qubit channel");
        }
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                for (int c = 0; c < 2; ++c) {
                    for (int d = 0; d < 2; ++d) {
                        s[(2 * a + b) * 4 + (2 * c + d)] += op(a, c) * std::conj(op(b, d));
                    }
                }
            }
        }
    }
    return s;
}

std::array<double, 3> ptm_diagonal(double p_x, double p_y, double p_z) {
    if (p_x < 0.0 || p_y < 0.0 || p_z < 0.0 || p_x + p_y + p_z > 1.0) {
        throw std::invalid_argument("invalid Pauli channel");
    }
    return {1.0 - 2.0 * (p_z + p_y), 1.0 - 2.0 * (p_z + p_x), 1.0 - 2.0 * (p_x + p_y)};
}

double amplified_rate(double p, int lambda) {
    check_probability(p, "base rate");
    if (lambda < 1) {
        throw std::invalid_argument("noise level must be at least 1");
    }
    return 1.0 - std::pow(1.0 - p, lambda);
}

std::vector<double> sample_coherent_offsets(const Coherent &bounds, int lambda, int group_count, Rng &rng) {
    std::vector<double> out(group_count, 0.0);
    const double lo = bounds.low * lambda;
    const double hi = bounds.high * lambda;
    if (lo == hi) {
        std::fill(out.begin(), out.end(), lo);
        return out;
    }
    std::uniform_real_distribution<double> dist(lo, hi);
    for (double &v : out) {
        v = dist(rng);
    }
    return out;
}

}  // namespace szne
