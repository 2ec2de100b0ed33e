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

#include <string>
#include <vector>

#include "szne/ledger.hpp"
#include "szne/mitigation.hpp"
#include "szne/surrogates.hpp"

namespace szne {

/// One JSON object per line: {"x": [...], "y": ..., "lambda": ..., "shots": ..., "seed": ...}.
std::string datasets_to_jsonl(const std::vector<Dataset> &datasets);
/// Groups records by level in order of first appearance.
std::vector<Dataset> datasets_from_jsonl(const std::string &text, LabelMode mode = LabelMode::shots);

/// {"level", "gamma", "truncation", "weights", "seed", "samples", "budget_per_sample", "dictionary"}.
std::string surrogate_to_json(const Surrogate &s);
Surrogate surrogate_from_json(const std::string &text);
std::string surrogates_to_json(const std::vector<Surrogate> &surrogates);
std::vector<Surrogate> surrogates_from_json(const std::string &text);

/// Header x0.., z_l<level>.., tag_l<level>.., estimate, ideal, residual; doubles printed with %.17g.
std::string runs_to_csv(const std::vector<MitigationRun> &runs);
/// Reads x, z, tags, estimate and (when present) ideal back from runs_to_csv output.
std::vector<MitigationRun> runs_from_csv(const std::string &text);

/// Two-column CSV with the given header names.
std::string columns_to_csv(const std::string &a_name, const std::vector<double> &a, const std::string &b_name,
                           const std::vector<double> &b);

/// Writes a file, creating parent directories.
void write_text_file(const std::string &path, const std::string &content);
std::string read_text_file(const std::string &path);

}  // namespace szne
