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

#include "szne/ledger.hpp"

#include "json.hpp"

namespace szne {

std::string LedgerSnapshot::to_json() const {
    nlohmann::ordered_json j;
    j["training"] = training;
    j["validation"] = validation;
    j["inference"] = inference;
    j["total"] = total();
    return j.dump(2);
}

void MeasurementLedger::add(Phase phase, std::uint64_t count) {
    switch (phase) {
        case Phase::training:
            training_.fetch_add(count, std::memory_order_relaxed);
            break;
        case Phase::validation:
            validation_.fetch_add(count, std::memory_order_relaxed);
            break;
        case Phase::inference:
            inference_.fetch_add(count, std::memory_order_relaxed);
            break;
    }
}

LedgerSnapshot MeasurementLedger::snapshot() const {
    return {training_.load(), validation_.load(), inference_.load()};
}

}  // namespace szne
