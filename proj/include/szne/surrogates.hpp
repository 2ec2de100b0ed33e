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

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "szne/circuit.hpp"
#include "szne/observable.hpp"
#include "szne/random.hpp"

namespace szne {

/// Sparse omega in {0, +-1}^d: (coordinate, sign) pairs sorted by coordinate.
/// +1 selects cos(x_j), -1 selects sin(x_j).
struct Frequency {
    std::vector<std::pair<int, std::int8_t>> entries;

    int weight() const { return static_cast<int>(entries.size()); }
    bool operator<(const Frequency &o) const { return entries < o.entries; }
    bool operator==(const Frequency &o) const = default;
};

struct FrequencySet {
    int dimension = 0;
    int truncation = 0;
    bool sampled = false;
    std::vector<Frequency> members;
};

/// sum_{k <= lambda} C(d, k) 2^k, as a double (exact below 2^53).
double frequency_set_size(int d, int truncation);

/// Enumerates C(truncation) when its size is at most `cap`, otherwise draws `sample_count` distinct
/// members uniformly at random.
FrequencySet frequency_set(int d, int truncation, std::size_t cap, std::size_t sample_count, Rng &rng);
FrequencySet frequency_set(int d, int truncation);

enum class DictionaryMode { independent, grouped_monomial, grouped_harmonic };

const char *dictionary_mode_name(DictionaryMode m);

/// cos(x_c)^a sin(x_c)^b.
struct MonomialFactor {
    int coord;
    int cos_power;
    int sin_power;
    bool operator==(const MonomialFactor &) const = default;
};

/// cos(k x_c) or sin(k x_c); k = 0 is the constant feature.
struct Harmonic {
    int coord;
    int k;
    bool sine;
    bool operator==(const Harmonic &) const = default;
};

class FeatureDictionary {
  public:
    FeatureDictionary() = default;

    /// One feature per omega over an ungrouped input vector.
    static FeatureDictionary independent(const FrequencySet &set);
    /// Distinct exponent tuples (N_s^+, N_s^-) reachable from omega with weight <= truncation.
    static FeatureDictionary grouped_monomial(const std::vector<int> &group_sizes, int truncation,
                                              std::size_t cap, std::size_t sample_count, Rng &rng);
    static FeatureDictionary grouped_monomial(const std::vector<int> &group_sizes, int truncation);
    /// Constant plus cos/sin(k x_s) for the listed harmonics of each group.
    static FeatureDictionary grouped_harmonic(const std::vector<int> &group_sizes,
                                              const std::vector<std::vector<int>> &harmonics);
    /// Keeps the `truncation` highest harmonics of each group with the parity of d_s:
    /// d_s, d_s - 2, ... (at least 1).
    static FeatureDictionary grouped_harmonic(const std::vector<int> &group_sizes, int truncation);

    DictionaryMode mode() const { return mode_; }
    int input_dimension() const { return dimension_; }
    int truncation() const { return truncation_; }
    bool sampled() const { return sampled_; }
    const std::vector<int> &group_sizes() const { return group_sizes_; }
    std::size_t size() const;

    double value(std::size_t index, std::span<const double> x) const;
    std::vector<double> features(std::span<const double> x) const;
    std::string describe(std::size_t index) const;

    const std::vector<std::vector<MonomialFactor>> &monomials() const { return monomials_; }
    const std::vector<Harmonic> &harmonics() const { return harmonics_; }

    /// Raw constructor used by deserialization; validates the descriptor.
    static FeatureDictionary from_parts(DictionaryMode mode, int dimension, int truncation, bool sampled,
                                        std::vector<int> group_sizes,
                                        std::vector<std::vector<MonomialFactor>> monomials,
                                        std::vector<Harmonic> harmonics);

    bool operator==(const FeatureDictionary &) const = default;

  private:
    void validate() const;

    DictionaryMode mode_ = DictionaryMode::independent;
    int dimension_ = 0;
    int truncation_ = 0;
    bool sampled_ = false;
    std::vector<int> group_sizes_;
    std::vector<std::vector<MonomialFactor>> monomials_;
    std::vector<Harmonic> harmonics_;
};

/// Feature value of omega on an ungrouped input.
double feature_value(const Frequency &omega, std::span<const double> x);

/// kappa(x, x') = sum over omega in C(truncation) of 2^|omega| Phi_omega(x) Phi_omega(x'),
/// evaluated as sum_k 2^k e_k(cos(x_j - x'_j)).
double kernel_eval(std::span<const double> x, std::span<const double> y, int truncation);

struct TrainingInfo {
    std::int64_t samples = 0;
    std::int64_t budget_per_sample = 0;
    std::uint64_t seed = 0;
    bool operator==(const TrainingInfo &) const = default;
};

/// Linear model over a feature dictionary, trained for one noise level.
struct Surrogate {
    FeatureDictionary dictionary;
    std::vector<double> weights;
    double gamma = 0.0;
    int level = 1;
    TrainingInfo info;

    bool operator==(const Surrogate &) const = default;
};

double predict(const Surrogate &s, std::span<const double> x);

/// Ridge regression via (Phi^T Phi / n + gamma I) w = Phi^T y / n.
Surrogate fit_ridge_surrogate(const std::vector<std::vector<double>> &inputs, const std::vector<double> &labels,
                              FeatureDictionary dictionary, double gamma, int level = 1);

/// h_cs(x) = (1 / n) sum_i kappa(x, x_i) y_i, kept in kernel form.
class KernelSurrogate {
  public:
    KernelSurrogate(std::vector<std::vector<double>> inputs, std::vector<double> labels, int truncation,
                    int level = 1);

    double predict(std::span<const double> x) const;
    int truncation() const { return truncation_; }
    int level() const { return level_; }
    std::size_t sample_count() const { return labels_.size(); }
    /// Weights 2^|omega| / n sum_i Phi_omega(x_i) y_i over the full frequency set.
    Surrogate materialize(std::size_t cap = 200000) const;

  private:
    std::vector<std::vector<double>> inputs_;
    std::vector<double> labels_;
    int truncation_;
    int level_;
};

/// Kernel surrogate materialized as a linear Surrogate over C(truncation).
Surrogate fit_kernel_surrogate(const std::vector<std::vector<double>> &inputs, const std::vector<double> &labels,
                               int truncation, int level = 1, std::size_t cap = 200000);

/// Exact coefficients of f in the basis prod_j {1, cos x_j, sin x_j}, recovered from f on the grid
/// {0, pi/2, pi}^d. Entry index is sum_j digit_j 3^j with digit 0 = constant, 1 = cos (+1), 2 = sin (-1).
std::vector<double> trig_coefficients(const std::function<double(std::span<const double>)> &f, int d);

/// Coefficient map omega -> c_omega of Tr(rho(x) O) over the circuit's individual slots.
std::map<std::vector<int>, double> trig_coeff_oracle(const ParamCircuit &c, const Observable &o);

/// Evaluates sum_omega c_omega Phi_omega(x) for a coefficient map from trig_coeff_oracle.
double trig_expand(const std::map<std::vector<int>, double> &coefficients, std::span<const double> x);

}  // namespace szne
