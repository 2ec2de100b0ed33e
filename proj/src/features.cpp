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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "szne/surrogates.hpp"

namespace szne {

namespace {

void enumerate_weight(int d, int k, std::vector<Frequency> &out) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        for (std::uint32_t signs = 0; signs < (1u << k); ++signs) {
            Frequency f;
            for (int i = 0; i < k; ++i) {
                f.entries.emplace_back(idx[i], ((signs >> i) & 1) ? -1 : 1);
            }
            out.push_back(std::move(f));
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == d - k + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++idx[i];
        for (int j = i + 1; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return std::round(r);
}

Frequency sample_member(int d, int truncation, std::discrete_distribution<int> &weight_dist, Rng &rng) {
    const int k = weight_dist(rng);
    // Floyd's algorithm for a uniform k-subset.
    std::set<int> chosen;
    for (int j = d - k; j < d; ++j) {
        int t = std::uniform_int_distribution<int>(0, j)(rng);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
        }
    }
    (void)truncation;
    Frequency f;
    std::bernoulli_distribution coin(0.5);
    for (int c : chosen) {
        f.entries.emplace_back(c, coin(rng) ? -1 : 1);
    }
    return f;
}

std::discrete_distribution<int> weight_distribution(int d, int truncation) {
    std::vector<double> w(truncation + 1);
    for (int k = 0; k <= truncation; ++k) {
        w[k] = binomial(d, k) * std::ldexp(1.0, k);
    }
    return std::discrete_distribution<int>(w.begin(), w.end());
}

void check_truncation(int d, int truncation) {
    if (d < 0 || truncation < 0) {
        throw std::invalid_argument("dimension and truncation must be non-negative");
    }
    if (truncation > d) {
        throw std::invalid_argument("truncation exceeds dimension");
    }
}

}  // namespace

double frequency_set_size(int d, int truncation) {
    check_truncation(d, truncation);
    double total = 0.0;
    for (int k = 0; k <= truncation; ++k) {
        total += binomial(d, k) * std::ldexp(1.0, k);
    }
    return total;
}

FrequencySet frequency_set(int d, int truncation, std::size_t cap, std::size_t sample_count, Rng &rng) {
    const double size = frequency_set_size(d, truncation);
    FrequencySet out;
    out.dimension = d;
    out.truncation = truncation;
    if (size <= static_cast<double>(cap) || size <= static_cast<double>(sample_count)) {
        for (int k = 0; k <= truncation; ++k) {
            enumerate_weight(d, k, out.members);
        }
        return out;
    }
    out.sampled = true;
    auto dist = weight_distribution(d, truncation);
    std::set<Frequency> seen;
    while (out.members.size() < sample_count) {
        Frequency f = sample_member(d, truncation, dist, rng);
        if (seen.insert(f).second) {
            out.members.push_back(std::move(f));
        }
    }
    return out;
}

FrequencySet frequency_set(int d, int truncation) {
    Rng unused(0);
    return frequency_set(d, truncation, std::numeric_limits<std::size_t>::max(), 0, unused);
}

const char *dictionary_mode_name(DictionaryMode m) {
    switch (m) {
        case DictionaryMode::independent:
            return "independent";
        case DictionaryMode::grouped_monomial:
            return "grouped_monomial";
        case DictionaryMode::grouped_harmonic:
            return "grouped_harmonic";
    }
    return "?";
}

FeatureDictionary FeatureDictionary::independent(const FrequencySet &set) {
    FeatureDictionary dict;
    dict.mode_ = DictionaryMode::independent;
    dict.dimension_ = set.dimension;
    dict.truncation_ = set.truncation;
    dict.sampled_ = set.sampled;
    dict.group_sizes_.assign(set.dimension, 1);
    for (const Frequency &f : set.members) {
        std::vector<MonomialFactor> factors;
        for (auto [c, s] : f.entries) {
            factors.push_back({c, s > 0 ? 1 : 0, s < 0 ? 1 : 0});
        }
        dict.monomials_.push_back(std::move(factors));
    }
    return dict;
}

namespace {

void enumerate_tuples(const std::vector<int> &sizes, int group, int remaining, std::vector<MonomialFactor> &current,
                      std::vector<std::vector<MonomialFactor>> &out, std::size_t limit) {
    if (out.size() > limit) {
        return;
    }
    if (group == static_cast<int>(sizes.size())) {
        out.push_back(current);
        return;
    }
    const int top = std::min(remaining, sizes[group]);
    for (int total = 0; total <= top; ++total) {
        for (int a = total; a >= 0; --a) {
            const int b = total - a;
            if (total > 0) {
                current.push_back({group, a, b});
            }
            enumerate_tuples(sizes, group + 1, remaining - total, current, out, limit);
            if (total > 0) {
                current.pop_back();
            }
        }
    }
}

}  // namespace

FeatureDictionary FeatureDictionary::grouped_monomial(const std::vector<int> &group_sizes, int truncation,
                                                      std::size_t cap, std::size_t sample_count, Rng &rng) {
    const int d = std::accumulate(group_sizes.begin(), group_sizes.end(), 0);
    check_truncation(d, truncation);
    FeatureDictionary dict;
    dict.mode_ = DictionaryMode::grouped_monomial;
    dict.dimension_ = static_cast<int>(group_sizes.size());
    dict.truncation_ = truncation;
    dict.group_sizes_ = group_sizes;
    std::vector<MonomialFactor> current;
    enumerate_tuples(group_sizes, 0, truncation, current, dict.monomials_, cap);
    if (dict.monomials_.size() <= cap) {
        std::sort(dict.monomials_.begin(), dict.monomials_.end(), [](const auto &l, const auto &r) {
            auto deg = [](const auto &v) {
                int s = 0;
                for (const auto &f : v) s += f.cos_power + f.sin_power;
                return s;
            };
            return deg(l) < deg(r);
        });
        return dict;
    }
    // Too many tuples: map uniformly drawn omegas over the slots to their exponent tuples.
    dict.monomials_.clear();
    dict.sampled_ = true;
    std::vector<int> group_of_slot;
    for (std::size_t s = 0; s < group_sizes.size(); ++s) {
        group_of_slot.insert(group_of_slot.end(), group_sizes[s], static_cast<int>(s));
    }
    auto dist = weight_distribution(d, truncation);
    std::set<std::vector<std::array<int, 3>>> seen;
    std::size_t attempts = 0;
    while (dict.monomials_.size() < sample_count && attempts++ < 1000 * sample_count) {
        Frequency f = sample_member(d, truncation, dist, rng);
        std::map<int, std::pair<int, int>> counts;
        for (auto [c, s] : f.entries) {
            auto &p = counts[group_of_slot[c]];
            (s > 0 ? p.first : p.second) += 1;
        }
        std::vector<std::array<int, 3>> key;
        std::vector<MonomialFactor> factors;
        for (auto &[g, p] : counts) {
            key.push_back({g, p.first, p.second});
            factors.push_back({g, p.first, p.second});
        }
        if (seen.insert(key).second) {
            dict.monomials_.push_back(std::move(factors));
        }
    }
    return dict;
}

FeatureDictionary FeatureDictionary::grouped_monomial(const std::vector<int> &group_sizes, int truncation) {
    Rng unused(0);
    return grouped_monomial(group_sizes, truncation, std::numeric_limits<std::size_t>::max() - 1, 0, unused);
}

FeatureDictionary FeatureDictionary::grouped_harmonic(const std::vector<int> &group_sizes,
                                                      const std::vector<std::vector<int>> &harmonics) {
    if (harmonics.size() != group_sizes.size()) {
        throw std::invalid_argument("one harmonic list per group required");
    }
    FeatureDictionary dict;
    dict.mode_ = DictionaryMode::grouped_harmonic;
    dict.dimension_ = static_cast<int>(group_sizes.size());
    dict.group_sizes_ = group_sizes;
    dict.harmonics_.push_back({0, 0, false});
    int widest = 0;
    for (std::size_t s = 0; s < group_sizes.size(); ++s) {
        widest = std::max(widest, static_cast<int>(harmonics[s].size()));
        for (int k : harmonics[s]) {
            dict.harmonics_.push_back({static_cast<int>(s), k, false});
            dict.harmonics_.push_back({static_cast<int>(s), k, true});
        }
    }
    dict.truncation_ = widest;
    dict.validate();
    return dict;
}

FeatureDictionary FeatureDictionary::grouped_harmonic(const std::vector<int> &group_sizes, int truncation) {
    if (truncation < 0) {
        throw std::invalid_argument("truncation must be non-negative");
    }
    std::vector<std::vector<int>> ks(group_sizes.size());
    for (std::size_t s = 0; s < group_sizes.size(); ++s) {
        for (int m = 0; m < truncation && group_sizes[s] - 2 * m >= 1; ++m) {
            ks[s].push_back(group_sizes[s] - 2 * m);
        }
    }
    FeatureDictionary dict = grouped_harmonic(group_sizes, ks);
    dict.truncation_ = truncation;
    return dict;
}

FeatureDictionary FeatureDictionary::from_parts(DictionaryMode mode, int dimension, int truncation, bool sampled,
                                                std::vector<int> group_sizes,
                                                std::vector<std::vector<MonomialFactor>> monomials,
                                                std::vector<Harmonic> harmonics) {
    FeatureDictionary dict;
    dict.mode_ = mode;
    dict.dimension_ = dimension;
    dict.truncation_ = truncation;
    dict.sampled_ = sampled;
    dict.group_sizes_ = std::move(group_sizes);
    dict.monomials_ = std::move(monomials);
    dict.harmonics_ = std::move(harmonics);
    dict.validate();
    return dict;
}

void FeatureDictionary::validate() const {
    if (static_cast<int>(group_sizes_.size()) != dimension_) {
        throw std::invalid_argument("dictionary group sizes do not match its dimension");
    }
    if (mode_ == DictionaryMode::grouped_harmonic) {
        if (!monomials_.empty()) {
            throw std::invalid_argument("harmonic dictionary carries monomial features");
        }
        for (const Harmonic &h : harmonics_) {
            if (h.coord < 0 || h.coord >= dimension_ || h.k < 0 || h.k > group_sizes_[h.coord]) {
                throw std::invalid_argument("harmonic exceeds its group size");
            }
        }
        return;
    }
    if (!harmonics_.empty()) {
        throw std::invalid_argument("monomial dictionary carries harmonic features");
    }
    for (const auto &feature : monomials_) {
        int degree = 0;
        for (const MonomialFactor &f : feature) {
            if (f.coord < 0 || f.coord >= dimension_ || f.cos_power < 0 || f.sin_power < 0 ||
                f.cos_power + f.sin_power > group_sizes_[f.coord]) {
                throw std::invalid_argument("monomial factor out of range");
            }
            degree += f.cos_power + f.sin_power;
        }
        if (degree > truncation_) {
            throw std::invalid_argument("monomial degree exceeds truncation");
        }
    }
}

std::size_t FeatureDictionary::size() const {
    return mode_ == DictionaryMode::grouped_harmonic ? harmonics_.size() : monomials_.size();
}

namespace {

double ipow(double v, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) {
        r *= v;
    }
    return r;
}

}  // namespace

double FeatureDictionary::value(std::size_t index, std::span<const double> x) const {
    if (index >= size()) {
        throw std::out_of_range("unknown feature");
    }
    if (static_cast<int>(x.size()) != dimension_) {
        throw std::invalid_argument("input dimension does not match the dictionary");
    }
    if (mode_ == DictionaryMode::grouped_harmonic) {
        const Harmonic &h = harmonics_[index];
        if (h.k == 0) {
            return 1.0;
        }
        const double a = h.k * x[h.coord];
        return h.sine ? std::sin(a) : std::cos(a);
    }
    double v = 1.0;
    for (const MonomialFactor &f : monomials_[index]) {
        v *= ipow(std::cos(x[f.coord]), f.cos_power) * ipow(std::sin(x[f.coord]), f.sin_power);
    }
    return v;
}

std::vector<double> FeatureDictionary::features(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_) {
        throw std::invalid_argument("input dimension does not match the dictionary");
    }
    std::vector<double> out(size());
    if (mode_ == DictionaryMode::grouped_harmonic) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = value(i, x);
        }
        return out;
    }
    std::vector<double> c(x.size()), s(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        c[j] = std::cos(x[j]);
        s[j] = std::sin(x[j]);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        double v = 1.0;
        for (const MonomialFactor &f : monomials_[i]) {
            v *= ipow(c[f.coord], f.cos_power) * ipow(s[f.coord], f.sin_power);
        }
        out[i] = v;
    }
    return out;
}

std::string FeatureDictionary::describe(std::size_t index) const {
    if (index >= size()) {
        throw std::out_of_range("unknown feature");
    }
    std::ostringstream out;
    if (mode_ == DictionaryMode::grouped_harmonic) {
        const Harmonic &h = harmonics_[index];
        if (h.k == 0) {
            return "1";
        }
        out << (h.sine ? "sin(" : "cos(") << h.k << "*x" << h.coord << ")";
        return out.str();
    }
    if (monomials_[index].empty()) {
        return "1";
    }
    bool first = true;
    for (const MonomialFactor &f : monomials_[index]) {
        if (!first) {
            out << "*";
        }
        first = false;
        if (f.cos_power) {
            out << "cos(x" << f.coord << ")^" << f.cos_power;
        }
        if (f.cos_power && f.sin_power) {
            out << "*";
        }
        if (f.sin_power) {
            out << "sin(x" << f.coord << ")^" << f.sin_power;
        }
    }
    return out.str();
}

double feature_value(const Frequency &omega, std::span<const double> x) {
    double v = 1.0;
    for (auto [c, s] : omega.entries) {
        if (c < 0 || c >= static_cast<int>(x.size())) {
            throw std::out_of_range("unknown feature");
        }
        v *= s > 0 ? std::cos(x[c]) : std::sin(x[c]);
    }
    return v;
}

double kernel_eval(std::span<const double> x, std::span<const double> y, int truncation) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("kernel inputs differ in dimension");
    }
    if (truncation < 0) {
        throw std::invalid_argument("truncation must be non-negative");
    }
    // Elementary symmetric polynomials e_0..e_truncation of cos(x_j - y_j).
    double e[32] = {1.0};
    const int top = std::min<int>(truncation, static_cast<int>(x.size()));
    if (top > 31) {
        throw std::invalid_argument("truncation too large for kernel evaluation");
    }
    for (int k = 1; k <= top; ++k) {
        e[k] = 0.0;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double c = std::cos(x[j] - y[j]);
        for (int k = top; k >= 1; --k) {
            e[k] += c * e[k - 1];
        }
    }
    double v = 0.0;
    for (int k = 0; k <= top; ++k) {
        v += std::ldexp(e[k], k);
    }
    return v;
}

}  // namespace szne
