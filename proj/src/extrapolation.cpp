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

#include "szne/extrapolation.hpp"

#include <cmath>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace szne {

const char *extrapolation_name(ExtrapolationKind k) {
    switch (k) {
        case ExtrapolationKind::linear:
            return "linear";
        case ExtrapolationKind::quadratic:
            return "quadratic";
        case ExtrapolationKind::richardson:
            return "richardson";
    }
    return "?";
}

ExtrapolationKind parse_extrapolation(const std::string &name) {
    if (name == "linear") return ExtrapolationKind::linear;
    if (name == "quadratic") return ExtrapolationKind::quadratic;
    if (name == "richardson") return ExtrapolationKind::richardson;
    throw std::invalid_argument("unknown extrapolation scheme '" + name + "'");
}

namespace {

std::vector<double> least_squares_intercept(const std::vector<int> &levels, int degree) {
    const auto u = static_cast<Eigen::Index>(levels.size());
    if (u < degree + 1) {
        throw std::invalid_argument("insufficient points");
    }
    Eigen::MatrixXd v(u, degree + 1);
    for (Eigen::Index i = 0; i < u; ++i) {
        double p = 1.0;
        for (int k = 0; k <= degree; ++k) {
            v(i, k) = p;
            p *= levels[i];
        }
    }
    const Eigen::MatrixXd gram = v.transpose() * v;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    if (lu.rank() < degree + 1) {
        throw std::invalid_argument("degenerate design matrix");
    }
    const Eigen::MatrixXd pinv = lu.solve(v.transpose());
    std::vector<double> s(u);
    for (Eigen::Index i = 0; i < u; ++i) {
        s[i] = pinv(0, i);
    }
    return s;
}

}  // namespace

std::vector<double> coefficients(ExtrapolationKind kind, const std::vector<int> &levels) {
    if (levels.empty()) {
        throw std::invalid_argument("insufficient points");
    }
    std::set<int> distinct(levels.begin(), levels.end());
    for (int l : levels) {
        if (l < 1) {
            throw std::invalid_argument("noise levels must be positive");
        }
    }
    if (distinct.size() != levels.size()) {
        throw std::invalid_argument("degenerate design matrix");
    }
    switch (kind) {
        case ExtrapolationKind::linear:
            return least_squares_intercept(levels, 1);
        case ExtrapolationKind::quadratic:
            return least_squares_intercept(levels, 2);
        case ExtrapolationKind::richardson: {
            const std::size_t used = std::min<std::size_t>(levels.size(), kRichardsonMaxLevels);
            if (used < levels.size()) {
                std::cerr << "warning: richardson extrapolation capped at " << kRichardsonMaxLevels
                          << " levels; remaining levels get zero weight\n";
            }
            std::vector<double> s(levels.size(), 0.0);
            for (std::size_t j = 0; j < used; ++j) {
                double g = 1.0;
                for (std::size_t k = 0; k < used; ++k) {
                    if (k != j) {
                        g *= static_cast<double>(levels[k]) / (levels[k] - levels[j]);
                    }
                }
                s[j] = g;
            }
            return s;
        }
    }
    throw std::invalid_argument("unknown extrapolation scheme");
}

ExtrapolationScheme make_scheme(ExtrapolationKind kind, const std::vector<int> &levels) {
    return {kind, levels, coefficients(kind, levels)};
}

double extrapolate(const ExtrapolationScheme &scheme, std::span<const double> z) {
    if (z.size() != scheme.coefficients.size()) {
        throw std::invalid_argument("value vector length does not match the scheme");
    }
    double v = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!std::isfinite(z[i])) {
            throw std::invalid_argument("non-finite value in extrapolation input");
        }
        v += scheme.coefficients[i] * z[i];
    }
    return v;
}

double lipschitz_constant(const ExtrapolationScheme &scheme) {
    double s = 0.0;
    for (double c : scheme.coefficients) {
        s += c * c;
    }
    return std::sqrt(s);
}

std::vector<int> parse_levels(const std::string &text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) {
            throw std::invalid_argument("bad level '" + tok + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("no levels given");
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i] <= out[i - 1]) {
            throw std::invalid_argument("levels must be strictly increasing");
        }
    }
    return out;
}

}  // namespace szne
