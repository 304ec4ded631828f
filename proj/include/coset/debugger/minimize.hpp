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
/// Search for a smallest set of edits that makes a classifier answer a
/// given label.
///
/// Every edit of the universe is first checked on its own with the
/// differential oracle (exact for preserving edits, approximating for
/// approximating ones, expect-divergence for guard removal); failing edits
/// are discarded. The search then takes a conflict-free set greedily (swaps
/// first) and, when that set does not reach the target, sets seeded with
/// each edit the greedy pass skipped. The first set that reaches the target
/// is reduced with ddmin, which leaves a 1-minimal set.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coset/debugger/edits.hpp"
#include "coset/harness/classifier.hpp"
#include "coset/oracle/differential.hpp"

namespace coset::debugger {

struct EditVerdict {
  AtomicEdit edit;
  oracle::Mode mode = oracle::Mode::Exact;
  bool pass = false;
  std::size_t divergences = 0;
};

struct RootCauseReport {
  std::string entry_id;
  std::string original_prediction;
  std::string target;
  /// False for the no-flip result.
  bool flipped = false;
  std::vector<AtomicEdit> edits;
  std::vector<EditVerdict> verdicts;   // one per reported edit
  std::vector<EditVerdict> discarded;  // universe edits the oracle rejected
  std::string tag;
  std::size_t universe = 0;
  std::size_t classifications = 0;
  std::string edited_source;
};

struct MinimizeOptions {
  bool guard_probe = false;
  std::size_t max_classifications = 20'000;
};

/// Throws std::invalid_argument when the entry is already classified as
/// `target`.
RootCauseReport minimize_flip(harness::Classifier& c, const corpus::CorpusEntry& entry,
                              const std::string& target, const MinimizeOptions& options = {});

/// "variable-name sensitivity", "type-name sensitivity", "API
/// generalization", "control-structure bias" or "guard sensitivity".
const char* tag_of(EditKind k);

std::string narrative(const RootCauseReport& r);

}  // namespace coset::debugger
