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

#include <span>
#include <string>
#include <vector>

namespace szne {

enum class ExtrapolationKind { linear, quadratic, richardson };

const char *extrapolation_name(ExtrapolationKind k);
ExtrapolationKind parse_extrapolation(const std::string &name);

/// Zero-noise estimate g(z) = <s, z> for a fixed set of noise levels.
struct ExtrapolationScheme {
    ExtrapolationKind kind;
    std::vector<int> levels;
    std::vector<double> coefficients;
};

/// Richardson schemes use at most this many levels; further levels get coefficient 0.
inline constexpr int kRichardsonMaxLevels = 8;

std::vector<double> coefficients(ExtrapolationKind kind, const std::vector<int> &levels);
ExtrapolationScheme make_scheme(ExtrapolationKind kind, const std::vector<int> &levels);

double extrapolate(const ExtrapolationScheme &scheme, std::span<const double> z);

/// l2 norm of the coefficient vector.
double lipschitz_constant(const ExtrapolationScheme &scheme);

/// Parses "1,2,3".
std::vector<int> parse_levels(const std::string &text);

}  // namespace szne
