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
/// Accuracy, per-label F1, stability rows and size bins.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "coset/harness/classifier.hpp"

namespace coset::harness {

struct LabelScore {
  std::string label;
  std::size_t support = 0;  // entries whose true label this is
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

struct EvalReport {
  std::size_t total = 0;
  std::size_t correct = 0;
  std::size_t errors = 0;
  double accuracy = 0;
  double macro_f1 = 0;
  /// Union of true and predicted labels, sorted.
  std::vector<LabelScore> labels;
  /// confusion[truth][prediction]; error predictions use kErrorColumn.
  std::map<std::string, std::map<std::string, std::size_t>> confusion;
};

inline constexpr const char* kErrorColumn = "<error>";

/// Throws std::invalid_argument on empty or mismatched inputs.
EvalReport score(const std::vector<std::string>& truth,
                 const std::vector<Prediction>& predicted);

/// F1 from precision and recall with 0/0 taken as 0.
double f1_score(double precision, double recall);

struct StabilityRow {
  std::string kind;
  std::size_t applicable = 0;
  std::size_t flipped = 0;

  double rate() const;
};

struct StabilityTable {
  std::vector<StabilityRow> rows;
  /// Kinds whose transform broke its contract on some entry.
  std::map<std::string, std::string> aborted;
};

/// Percentage with one decimal, the way the stability table prints it.
std::string percent(double rate);

struct SizeBin {
  std::size_t lo = 0;  // bytes, inclusive
  std::size_t hi = 0;  // bytes, exclusive
  std::size_t count = 0;
  double accuracy = 0;
  double macro_f1 = 0;
};

}  // namespace coset::harness
