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

#include "szne/estimation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace szne {

ShotEstimate estimate_from_mean(double mean, double norm_bound, std::int64_t shots, Rng &rng) {
    if (shots < 1) {
        throw std::invalid_argument("invalid shot count");
    }
    if (!(norm_bound > 0.0)) {
        throw std::invalid_argument("norm bound must be positive");
    }
    const double p_plus = std::clamp(0.5 * (1.0 + mean / norm_bound), 0.0, 1.0);
    std::binomial_distribution<std::int64_t> dist(shots, p_plus);
    const std::int64_t plus = dist(rng);
    const double value = norm_bound * (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
                         static_cast<double>(shots);
    return {value, shots, norm_bound};
}

ShotEstimate estimate_with_shots(std::span<const double> term_expectations, const Observable &o, std::int64_t shots,
                                 Rng &rng) {
    if (term_expectations.size() != o.terms().size()) {
        throw std::invalid_argument("one expectation per observable term required");
    }
    double mean = 0.0;
    for (std::size_t i = 0; i < term_expectations.size(); ++i) {
        mean += o.terms()[i].coefficient * term_expectations[i];
    }
    return estimate_from_mean(mean, o.norm_bound(), shots, rng);
}

ShadowSet collect_shadows(const DensityMatrix &rho, std::int64_t snapshots, Rng &rng) {
    if (snapshots < 1) {
        throw std::invalid_argument("invalid snapshot count");
    }
    const int n = rho.qubit_count();
    const std::size_t dim = std::size_t{1} << n;
    const std::vector<double> pv = rho.pauli_expectations();
    ShadowSet out;
    out.qubit_count = n;
    out.bases.resize(static_cast<std::size_t>(snapshots) * n);
    out.outcomes.resize(static_cast<std::size_t>(snapshots) * n);

    std::uniform_int_distribution<int> basis_dist(1, 3);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<std::size_t> index(dim);
    std::vector<double> w(dim);
    std::vector<std::size_t> pow4(n);
    for (int q = 0; q < n; ++q) {
        pow4[q] = std::size_t{1} << (2 * q);
    }
    for (std::int64_t t = 0; t < snapshots; ++t) {
        std::uint8_t *b = &out.bases[static_cast<std::size_t>(t) * n];
        for (int q = 0; q < n; ++q) {
            b[q] = static_cast<std::uint8_t>(basis_dist(rng));
        }
        // Correlators of the measured Pauli on every subset, then a Walsh-Hadamard transform
        // yields outcome probabilities p(s) = 2^-N sum_S g[S] (-1)^{|S & s|}.
        index[0] = 0;
        for (std::size_t mask = 1; mask < dim; ++mask) {
            const int low = std::countr_zero(mask);
            index[mask] = index[mask & (mask - 1)] + b[low] * pow4[low];
        }
        for (std::size_t mask = 0; mask < dim; ++mask) {
            w[mask] = pv[index[mask]];
        }
        for (std::size_t h = 1; h < dim; h <<= 1) {
            for (std::size_t i = 0; i < dim; i += 2 * h) {
                for (std::size_t j = i; j < i + h; ++j) {
                    const double a = w[j], c = w[j + h];
                    w[j] = a + c;
                    w[j + h] = a - c;
                }
            }
        }
        double total = 0.0;
        for (double &v : w) {
            v = std::max(v, 0.0);
            total += v;
        }
        double r = u01(rng) * total;
        std::size_t s = 0;
        for (; s + 1 < dim; ++s) {
            r -= w[s];
            if (r < 0.0) {
                break;
            }
        }
        std::int8_t *o = &out.outcomes[static_cast<std::size_t>(t) * n];
        for (int q = 0; q < n; ++q) {
            o[q] = ((s >> q) & 1) ? -1 : 1;
        }
    }
    return out;
}

ShadowSet collect_shadows(const ParamCircuit &c, std::span<const double> x, const NoiseModel &noise, int lambda,
                          std::int64_t snapshots, Rng &rng, const SimLimits &limits) {
    if (c.qubit_count() > limits.dense_noisy) {
        throw std::invalid_argument("shadow collection requires dense backend");
    }
    ShadowSet s = collect_shadows(noisy_state(c, x, noise, lambda, limits), snapshots, rng);
    s.level = lambda;
    return s;
}

double estimate_from_shadows(const ShadowSet &s, const Observable &o) {
    if (o.locality() > s.qubit_count || o.max_qubit() >= s.qubit_count) {
        throw std::invalid_argument("observable exceeds the shadow register");
    }
    const std::int64_t count = s.count();
    if (count < 1) {
        throw std::invalid_argument("empty shadow set");
    }
    const int n = s.qubit_count;
    double total = 0.0;
    for (const PauliTerm &t : o.terms()) {
        if (t.ops.empty()) {
            total += t.coefficient;
            continue;
        }
        double acc = 0.0;
        for (std::int64_t k = 0; k < count; ++k) {
            const std::size_t base = static_cast<std::size_t>(k) * n;
            double v = 1.0;
            for (const auto &[q, p] : t.ops) {
                if (s.bases[base + q] != static_cast<std::uint8_t>(p)) {
                    v = 0.0;
                    break;
                }
                v *= 3.0 * s.outcomes[base + q];
            }
            acc += v;
        }
        total += t.coefficient * acc / static_cast<double>(count);
    }
    return total;
}

}  // namespace szne
