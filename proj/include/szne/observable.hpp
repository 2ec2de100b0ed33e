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
#include <string>
#include <utility>
#include <vector>

namespace szne {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Coefficient times a Pauli string given as (qubit, operator) pairs sorted by qubit.
struct PauliTerm {
    double coefficient;
    std::vector<std::pair<int, Pauli>> ops;

    int weight() const { return static_cast<int>(ops.size()); }
    std::string label() const;
};

/// Weighted sum of distinct Pauli strings.
class Observable {
  public:
    Observable() = default;
    explicit Observable(std::vector<PauliTerm> terms);

    /// Parses strings such as "0.5*Z0*Z1" style entries: {coefficient, "Z0 Z1"}.
    static Observable from_labels(const std::vector<std::pair<double, std::string>> &terms);

    const std::vector<PauliTerm> &terms() const { return terms_; }
    double norm_bound() const { return norm_bound_; }
    int locality() const { return locality_; }
    /// Largest qubit index referenced, or -1 for an identity-only observable.
    int max_qubit() const;
    bool is_traceless() const;
    double identity_coefficient() const;

  private:
    std::vector<PauliTerm> terms_;
    double norm_bound_ = 0.0;
    int locality_ = 0;
};

}  // namespace szne
