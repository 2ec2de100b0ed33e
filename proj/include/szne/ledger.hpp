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

#include <atomic>
#include <cstdint>
#include <string>

namespace szne {

enum class Phase { training, validation, inference };

struct LedgerSnapshot {
    std::uint64_t training = 0;
    std::uint64_t validation = 0;
    std::uint64_t inference = 0;

    std::uint64_t total() const { return training + validation + inference; }
    LedgerSnapshot operator-(const LedgerSnapshot &o) const {
        return {training - o.training, validation - o.validation, inference - o.inference};
    }
    bool operator==(const LedgerSnapshot &) const = default;
    /// {"training": ..., "validation": ..., "inference": ..., "total": ...}
    std::string to_json() const;
};

/// Thread-safe count of shots and snapshots consumed per phase.
class MeasurementLedger {
  public:
    void add(Phase phase, std::uint64_t count);
    LedgerSnapshot snapshot() const;

  private:
    std::atomic<std::uint64_t> training_{0};
    std::atomic<std::uint64_t> validation_{0};
    std::atomic<std::uint64_t> inference_{0};
};

}  // namespace szne
