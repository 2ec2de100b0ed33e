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

#include "szne/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace szne {

namespace {

void check_observable_fits(const Observable &o, int n) {
    if (o.max_qubit() >= n) {
        throw std::invalid_argument("observable acts outside the register");
    }
}

void run_ops(StateVector &psi, const std::vector<Op> &ops, const std::vector<double> &angles) {
    for (const Op &op : ops) {
        if (op.is_rotation()) {
            psi.apply_rz(op.q0, angles[op.slot]);
        } else {
            psi.apply(op.kind, op.q0, op.q1);
        }
    }
}

}  // namespace

StateVector simulate_state(const ParamCircuit &c, std::span<const double> x) {
    const std::vector<double> angles = c.slot_angles(x);
    StateVector psi(c.qubit_count());
    run_ops(psi, flatten(c), angles);
    return psi;
}

double ideal_expectation(const ParamCircuit &c, std::span<const double> x, const Observable &o,
                         const SimLimits &limits) {
    if (c.qubit_count() > limits.dense_ideal) {
        throw std::invalid_argument("use light-cone or analytic backend");
    }
    check_observable_fits(o, c.qubit_count());
    return simulate_state(c, x).expectation(o);
}

DensityMatrix noisy_state(const ParamCircuit &c, std::span<const double> x, const NoiseModel &noise, int lambda,
                          const SimLimits &limits) {
    if (c.qubit_count() > limits.dense_noisy) {
        throw std::invalid_argument("density-matrix backend limited to " + std::to_string(limits.dense_noisy) +
                                    " qubits");
    }
    if (lambda < 1) {
        throw std::invalid_argument("noise level must be at least 1");
    }
    noise.validate();
    int repeat = lambda;
    if (noise.amplification == Amplification::structural_fold) {
        if (c.fold_factor() != lambda) {
            throw std::invalid_argument("structural folding expects a circuit folded to the requested level");
        }
        repeat = 1;
    }
    const bool local = noise.has_local_channels();
    const Superop n1 = superop_power(superop_of(make_channel(noise, 1)), repeat);
    const Superop n2 = superop_power(superop_of(make_channel(noise, 2)), repeat);
    Superop gates[5];
    for (int k = 0; k < 5; ++k) {
        Superop g = superop_of_gate(static_cast<GateKind>(k));
        gates[k] = local ? superop_compose(n1, g) : g;
    }
    const std::vector<double> angles = c.slot_angles(x);
    DensityMatrix rho(c.qubit_count());
    for (const Op &op : flatten(c)) {
        if (op.is_rotation()) {
            Superop r = superop_of_rz(angles[op.slot]);
            rho.apply(local ? superop_compose(n1, r) : r, op.q0);
        } else if (op.kind == GateKind::CNOT) {
            rho.apply_cnot(op.q0, op.q1);
            if (local) {
                rho.apply(n2, op.q0);
                rho.apply(n2, op.q1);
            }
        } else {
            rho.apply(gates[static_cast<int>(op.kind)], op.q0);
        }
    }
    if (auto g = noise.global()) {
        if (noise.amplification == Amplification::channel_repetition) {
            for (int k = 0; k < lambda; ++k) {
                rho.apply_global_depolarizing(g->p);
            }
        } else {
            rho.apply_global_depolarizing(amplified_rate(g->p, lambda));
        }
    }
    return rho;
}

double noisy_expectation(const ParamCircuit &c, std::span<const double> x, const Observable &o,
                         const NoiseModel &noise, int lambda, const SimLimits &limits) {
    check_observable_fits(o, c.qubit_count());
    noise.validate();
    if (!noise.has_local_channels() && noise.amplification != Amplification::structural_fold) {
        const double p = noise.global() ? amplified_rate(noise.global()->p, lambda) : 0.0;
        if (o.is_traceless()) {
            const double ideal = c.qubit_count() <= limits.dense_ideal ? ideal_expectation(c, x, o, limits)
                                                                       : lightcone_expectation(c, x, o, limits);
            return (1.0 - p) * ideal;
        }
        if (c.qubit_count() > limits.dense_noisy) {
            throw std::invalid_argument("analytic path requires traceless observable");
        }
    }
    return noisy_state(c, x, noise, lambda, limits).expectation(o);
}

LightconePlan::LightconePlan(const ParamCircuit &c, const Observable &o, const SimLimits &limits) : circuit_(c) {
    check_observable_fits(o, c.qubit_count());
    const std::vector<Op> ops = flatten(c);
    std::vector<char> in_cone(c.qubit_count());
    for (const PauliTerm &t : o.terms()) {
        if (t.ops.empty()) {
            constant_ += t.coefficient;
            continue;
        }
        std::fill(in_cone.begin(), in_cone.end(), 0);
        for (const auto &op : t.ops) {
            in_cone[op.first] = 1;
        }
        std::vector<Op> kept;
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            const bool two = it->arity() == 2;
            if (in_cone[it->q0] || (two && in_cone[it->q1])) {
                kept.push_back(*it);
                in_cone[it->q0] = 1;
                if (two) {
                    in_cone[it->q1] = 1;
                }
            }
        }
        std::reverse(kept.begin(), kept.end());
        Cone cone;
        std::vector<int> local(c.qubit_count(), -1);
        for (int q = 0; q < c.qubit_count(); ++q) {
            if (in_cone[q]) {
                local[q] = static_cast<int>(cone.qubits.size());
                cone.qubits.push_back(q);
            }
        }
        if (static_cast<int>(cone.qubits.size()) > limits.dense_ideal) {
            throw std::invalid_argument("light cone too wide");
        }
        for (Op op : kept) {
            op.q0 = local[op.q0];
            if (op.arity() == 2) {
                op.q1 = local[op.q1];
            }
            cone.ops.push_back(op);
        }
        cone.term = t;
        for (auto &op : cone.term.ops) {
            op.first = local[op.first];
        }
        cones_.push_back(std::move(cone));
    }
}

double LightconePlan::evaluate(std::span<const double> x) const {
    const std::vector<double> angles = circuit_.slot_angles(x);
    double v = constant_;
    for (const Cone &cone : cones_) {
        StateVector psi(static_cast<int>(cone.qubits.size()));
        run_ops(psi, cone.ops, angles);
        v += psi.expectation(cone.term);
    }
    return v;
}

int LightconePlan::widest_cone() const {
    int w = 0;
    for (const Cone &cone : cones_) {
        w = std::max(w, static_cast<int>(cone.qubits.size()));
    }
    return w;
}

double lightcone_expectation(const ParamCircuit &c, std::span<const double> x, const Observable &o,
                             const SimLimits &limits) {
    return LightconePlan(c, o, limits).evaluate(x);
}

double ghz_analytic(int n, double x, double p_eff) {
    if (!(p_eff >= 0.0 && p_eff <= 1.0)) {
        throw std::invalid_argument("depolarizing rate outside [0, 1]");
    }
    return (1.0 - p_eff) * std::cos(n * x);
}

}  // namespace szne
