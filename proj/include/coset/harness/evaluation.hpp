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
/// Accuracy, stability and scalability runs of one classifier.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coset/harness/metrics.hpp"
#include "coset/transforms/transforms.hpp"

namespace coset::harness {

using Entries = std::vector<const corpus::CorpusEntry*>;

/// Predictions in entry order. With `jobs` > 1 the entries are spread over
/// clones of `c`.
std::vector<Prediction> classify_all(Classifier& c, const Entries& entries,
                                     unsigned jobs = 1);

/// Throws std::invalid_argument on an empty test set.
EvalReport evaluate(Classifier& c, const Entries& test, unsigned jobs = 1);

struct StabilityOptions {
  transforms::TransformConfig config;
  unsigned jobs = 1;
};

/// For every kind: transform each entry, skip inapplicable ones, check the
/// contract with the differential oracle on the entry's inputs, then count
/// entries whose prediction changes. A contract violation aborts that kind.
/// Kinds with no applicable entry get no row. Changing kinds are rejected
/// with std::invalid_argument.
StabilityTable stability(Classifier& c, const Entries& test,
                         std::span<const transforms::TransformKind> kinds,
                         const StabilityOptions& options = {});

/// The entry with its source replaced by the printed `p`.
corpus::CorpusEntry with_program(const corpus::CorpusEntry& e, const lang::Program& p);

/// Data-projected traces of `a` and `b` agree on every input.
bool data_traces_equal(const lang::Program& a, const lang::Program& b,
                       const oracle::Suite& inputs);

enum class SizeSource { Source, Trace };

const char* to_string(SizeSource s);

/// Source: 15 bytes per line. Trace: 20 bytes per state change, averaged
/// over the entry's inputs.
std::size_t entry_size(const corpus::CorpusEntry& e, SizeSource source);

/// Bins of `bin_width` bytes; only nonempty bins are returned, in order.
std::vector<SizeBin> scalability(Classifier& c, const Entries& test,
                                 std::size_t bin_width = 300,
                                 SizeSource source = SizeSource::Source,
                                 unsigned jobs = 1);

/// Aligned plain-text rendering with one row per kind.
std::string format_stability(const StabilityTable& t, const std::string& model);
std::string format_report(const EvalReport& r);
std::string format_bins(const std::vector<SizeBin>& bins);

}  // namespace coset::harness
