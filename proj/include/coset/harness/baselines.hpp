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
/// Two trainable reference classifiers.
///
/// static-bag: nearest centroid by cosine similarity over token counts of
/// the printed source. Identifiers are tokens, so renaming moves programs.
///
/// dynamic-trace: nearest centroid by Euclidean distance over z-scored
/// summaries of the data-projected traces of the entry's inputs. The
/// projection ignores names, bool flags and step counts.

#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coset/harness/classifier.hpp"

namespace coset::harness {

enum class BaselineKind { StaticBag, DynamicTrace };

const char* to_string(BaselineKind k);
std::optional<BaselineKind> parse_baseline(std::string_view s);

/// Token counts of the printed program.
std::map<std::string, double> token_bag(const lang::Program& p);

inline constexpr std::size_t kTraceFeatures = 7;
using TraceFeatures = std::array<double, kTraceFeatures>;

/// Mean over `inputs` of: snapshots per element, snapshots per squared
/// element, share of array writes, swaps per squared element, distinct
/// slots, mean absolute scalar delta, share of unit increments.
TraceFeatures trace_features(const lang::Program& p, const oracle::Suite& inputs);

/// Throws std::invalid_argument on an empty training set.
std::unique_ptr<Classifier> train_baseline(
    BaselineKind kind, const std::vector<const corpus::CorpusEntry*>& train);

}  // namespace coset::harness
