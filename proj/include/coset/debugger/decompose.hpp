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
/// Property decomposition: relabel the corpus by one property at a time,
/// retrain a baseline and see under which properties the entry is still
/// misclassified.

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "coset/corpus/manifest.hpp"
#include "coset/harness/baselines.hpp"

namespace coset::debugger {

struct DecompositionRow {
  oracle::PropertySpec spec;
  bool applicable = false;
  std::string expected;
  std::string predicted;
  bool correct = false;
  std::string note;
};

struct DecompositionReport {
  std::string entry_id;
  std::string full_label;
  std::string full_prediction;
  bool full_correct = false;
  std::vector<DecompositionRow> rows;
  /// Specs under which the entry is misclassified.
  std::vector<std::string> failing;
  /// Misclassified under the full label but correct under every property.
  bool inconsistent = false;
};

/// Trains on the manifest's train split each time. Throws
/// std::invalid_argument for an empty spec list or an unknown entry.
/// Returns a classifier trained on the train split of `m`. `tag` is "full"
/// for the original labels and the property name for a relabelled corpus.
using Trainer = std::function<std::unique_ptr<harness::Classifier>(
    const corpus::Manifest& m, const std::string& tag)>;

DecompositionReport property_decomposition(const Trainer& train, const corpus::Manifest& m,
                                           std::string_view entry_id,
                                           const std::vector<oracle::PropertySpec>& specs);

/// Retrains the built-in baseline `kind` for every relabelling.
DecompositionReport property_decomposition(harness::BaselineKind kind,
                                           const corpus::Manifest& m,
                                           std::string_view entry_id,
                                           const std::vector<oracle::PropertySpec>& specs);

std::string narrative(const DecompositionReport& r);

}  // namespace coset::debugger
