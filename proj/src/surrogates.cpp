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

#include "szne/surrogates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "szne/simulator.hpp"

namespace szne {

double predict(const Surrogate &s, std::span<const double> x) {
    if (static_cast<int>(x.size()) != s.dictionary.input_dimension()) {
        throw std::invalid_argument("input dimension does not match the surrogate");
    }
    if (s.weights.size() != s.dictionary.size()) {
        throw std::invalid_argument("surrogate weights do not match its dictionary");
    }
    const std::vector<double> phi = s.dictionary.features(x);
    double v = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        v += phi[i] * s.weights[i];
    }
    return v;
}

Surrogate fit_ridge_surrogate(const std::vector<std::vector<double>> &inputs, const std::vector<double> &labels,
                              FeatureDictionary dictionary, double gamma, int level) {
    if (inputs.empty()) {
        throw std::invalid_argument("empty training set");
    }
    if (inputs.size() != labels.size()) {
        throw std::invalid_argument("inputs and labels differ in length");
    }
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("regularization must be non-negative");
    }
    const auto n = static_cast<Eigen::Index>(inputs.size());
    const auto p = static_cast<Eigen::Index>(dictionary.size());
    Eigen::MatrixXd phi(n, p);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::vector<double> row = dictionary.features(inputs[i]);
        phi.row(i) = Eigen::Map<const Eigen::RowVectorXd>(row.data(), p);
        y(i) = labels[i];
    }
    Eigen::MatrixXd a = phi.transpose() * phi / static_cast<double>(n);
    a.diagonal().array() += gamma;
    const Eigen::VectorXd b = phi.transpose() * y / static_cast<double>(n);
    Eigen::VectorXd w;
    if (gamma == 0.0) {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
        if (qr.rank() < p) {
            throw std::invalid_argument("regularization required");
        }
        w = qr.solve(b);
    } else {
        Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
        if (ldlt.info() != Eigen::Success) {
            throw std::runtime_error("ridge system factorization failed");
        }
        w = ldlt.solve(b);
    }
    Surrogate s;
    s.dictionary = std::move(dictionary);
    s.weights.assign(w.data(), w.data() + w.size());
    s.gamma = gamma;
    s.level = level;
    s.info.samples = n;
    return s;
}

KernelSurrogate::KernelSurrogate(std::vector<std::vector<double>> inputs, std::vector<double> labels, int truncation,
                                 int level)
    : inputs_(std::move(inputs)), labels_(std::move(labels)), truncation_(truncation), level_(level) {
    if (inputs_.empty()) {
        throw std::invalid_argument("empty training set");
    }
    if (inputs_.size() != labels_.size()) {
        throw std::invalid_argument("inputs and labels differ in length");
    }
    for (const auto &x : inputs_) {
        if (x.size() != inputs_.front().size()) {
            throw std::invalid_argument("training inputs differ in dimension");
        }
    }
    if (truncation_ < 0 || truncation_ > static_cast<int>(inputs_.front().size())) {
        throw std::invalid_argument("truncation exceeds dimension");
    }
}

double KernelSurrogate::predict(std::span<const double> x) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
        acc += kernel_eval(x, inputs_[i], truncation_) * labels_[i];
    }
    return acc / static_cast<double>(inputs_.size());
}

Surrogate KernelSurrogate::materialize(std::size_t cap) const {
    const int d = static_cast<int>(inputs_.front().size());
    if (frequency_set_size(d, truncation_) > static_cast<double>(cap)) {
        throw std::invalid_argument("frequency set too large to materialize");
    }
    const FrequencySet set = frequency_set(d, truncation_);
    std::vector<double> w(set.members.size(), 0.0);
    std::vector<double> c(d), s(d);
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
        for (int j = 0; j < d; ++j) {
            c[j] = std::cos(inputs_[i][j]);
            s[j] = std::sin(inputs_[i][j]);
        }
        for (std::size_t m = 0; m < set.members.size(); ++m) {
            double v = labels_[i];
            for (auto [coord, sign] : set.members[m].entries) {
                v *= sign > 0 ? c[coord] : s[coord];
            }
            w[m] += v;
        }
    }
    const double n = static_cast<double>(inputs_.size());
    for (std::size_t m = 0; m < w.size(); ++m) {
        w[m] *= std::ldexp(1.0, set.members[m].weight()) / n;
    }
    Surrogate out;
    out.dictionary = FeatureDictionary::independent(set);
    out.weights = std::move(w);
    out.level = level_;
    out.info.samples = static_cast<std::int64_t>(inputs_.size());
    return out;
}

Surrogate fit_kernel_surrogate(const std::vector<std::vector<double>> &inputs, const std::vector<double> &labels,
                               int truncation, int level, std::size_t cap) {
    return KernelSurrogate(inputs, labels, truncation, level).materialize(cap);
}

std::vector<double> trig_coefficients(const std::function<double(std::span<const double>)> &f, int d) {
    if (d < 0 || d > 12) {
        throw std::invalid_argument("oracle limited to small d");
    }
    std::size_t total = 1;
    for (int j = 0; j < d; ++j) {
        total *= 3;
    }
    static constexpr double kGrid[3] = {0.0, std::numbers::pi / 2, std::numbers::pi};
    std::vector<double> v(total);
    std::vector<double> x(d);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t r = idx;
        for (int j = 0; j < d; ++j) {
            x[j] = kGrid[r % 3];
            r /= 3;
        }
        v[idx] = f(x);
    }
    // Invert (1, cos, sin) at (0, pi/2, pi) along each axis.
    std::size_t stride = 1;
    for (int j = 0; j < d; ++j, stride *= 3) {
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % 3 != 0) {
                continue;
            }
            const double v0 = v[base], v1 = v[base + stride], v2 = v[base + 2 * stride];
            const double a = 0.5 * (v0 + v2);
            v[base] = a;
            v[base + stride] = 0.5 * (v0 - v2);
            v[base + 2 * stride] = v1 - a;
        }
    }
    return v;
}

std::map<std::vector<int>, double> trig_coeff_oracle(const ParamCircuit &c, const Observable &o) {
    const int d = c.slot_count();
    if (d > 6) {
        throw std::invalid_argument("oracle limited to small d");
    }
    std::vector<int> identity(d);
    for (int s = 0; s < d; ++s) {
        identity[s] = s;
    }
    const ParamCircuit ungrouped(c.qubit_count(), c.layers(), identity, 1);
    const std::vector<double> coeffs =
        trig_coefficients([&](std::span<const double> x) { return ideal_expectation(ungrouped, x, o); }, d);
    std::map<std::vector<int>, double> out;
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
        std::vector<int> omega(d);
        std::size_t r = idx;
        for (int j = 0; j < d; ++j) {
            const int digit = static_cast<int>(r % 3);
            omega[j] = digit == 0 ? 0 : (digit == 1 ? 1 : -1);
            r /= 3;
        }
        out[omega] = coeffs[idx];
    }
    return out;
}

double trig_expand(const std::map<std::vector<int>, double> &coefficients, std::span<const double> x) {
    double v = 0.0;
    for (const auto &[omega, c] : coefficients) {
        if (omega.size() != x.size()) {
            throw std::invalid_argument("input dimension does not match the expansion");
        }
        double phi = c;
        for (std::size_t j = 0; j < omega.size() && phi != 0.0; ++j) {
            if (omega[j] == 1) {
                phi *= std::cos(x[j]);
            } else if (omega[j] == -1) {
                phi *= std::sin(x[j]);
            }
        }
        v += phi;
    }
    return v;
}

}  // namespace szne
