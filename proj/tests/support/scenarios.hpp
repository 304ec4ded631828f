// Copyright 2026 The CoSet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file
/// Seeded fixtures shared by the debugger tests and the acceptance suite.

#pragma once

#include <string>
#include <vector>

#include "coset/corpus/manifest.hpp"

namespace coset::testing {

/// A two-label training set in which one surface feature separates the
/// labels, and an entry of the first label that carries the feature of the
/// second. `planted` lists the descriptions of the edits that undo it.
struct FlipScenario {
  std::string name;
  std::vector<corpus::CorpusEntry> train;
  corpus::CorpusEntry entry;
  std::string target;
  std::vector<std::string> planted;
  bool guard_probe = false;
};

/// Rename, type-name, switch, API and guard scenarios, in that order.
std::vector<FlipScenario> flip_scenarios();

/// Odd-even transposition sort inside `while (!sorted)`: sorts, but does
/// not bubble the maximum to the end on every pass.
extern const char* const kOddEvenSort;

/// A generated corpus plus the odd-even sort as a test entry with id
/// "oddeven-001" and its derived label.
corpus::Manifest decomposition_corpus(std::uint64_t seed = 11, std::size_t per_label = 18);

}  // namespace coset::testing
