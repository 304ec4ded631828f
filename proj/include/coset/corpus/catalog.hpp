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
/// Tasks, labels and corpus entries.
///
/// A label is defined by a conjunction of property checks, each expecting
/// the property to hold or to fail. Every label of the catalog is decided
/// by running the program; labels of one task differ in at least one check.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coset/lang/ast.hpp"
#include "coset/oracle/properties.hpp"

namespace coset::corpus {

enum class Split { Train, Valid, Test };

const char* to_string(Split s);
std::optional<Split> parse_split(std::string_view s);

struct CorpusEntry {
  std::string id;
  std::string task;
  std::string label;
  std::string family;   // entries generated from one style share a family
  std::string variant;  // "base", "permuted" or "renamed"
  std::string source;
  oracle::Suite inputs;
  Split split = Split::Train;

  /// Parses and validates `source`; throws lang::SourceError.
  lang::Program program() const;
};

struct LabelCheck {
  oracle::PropertySpec spec;
  bool expected = true;
};

std::string to_string(const LabelCheck& c);

struct LabelDef {
  std::string label;
  std::string task;
  std::vector<LabelCheck> checks;
};

struct TaskDef {
  std::string id;
  /// Properties that are meaningful for programs of the task.
  std::vector<oracle::PropertySpec> properties;
  /// Input sizes for the complexity estimator.
  oracle::InputMaker make_input;
  /// Value returned by the guard clause variant.
  int guard_value = -1;
};

const std::vector<TaskDef>& tasks();
const std::vector<LabelDef>& labels();
const TaskDef* find_task(std::string_view id);
const LabelDef* find_label(std::string_view label);
std::vector<const LabelDef*> labels_of(std::string_view task);

/// Whether `spec` is meaningful for `task` (P3 is not, for searching).
bool applies(const TaskDef& task, const oracle::PropertySpec& spec);

/// Edge cases plus `random` seeded arrays (and keys for searching).
oracle::Suite input_suite(const TaskDef& task, std::uint64_t seed,
                          std::size_t random = 6);
/// The entry suite extended for label certification: exhaustive
/// permutations up to length 5 for array tasks, more keys for searching.
oracle::Suite certification_suite(const TaskDef& task, const oracle::Suite& base);

struct CheckOutcome {
  LabelCheck check;
  oracle::PropertyResult result;
  bool ok = false;
};

struct LabelVerdict {
  bool ok = false;
  std::vector<CheckOutcome> checks;
};

LabelVerdict check_label(const LabelDef& def, const lang::Program& p,
                         const oracle::Suite& suite,
                         const oracle::PropertyOptions& options = {});

oracle::PropertyOptions property_options(const TaskDef& task);

/// First label of `task` whose checks all pass.
std::optional<std::string> derive_label(const TaskDef& task,
                                        const lang::Program& p,
                                        const oracle::Suite& suite);

}  // namespace coset::corpus
