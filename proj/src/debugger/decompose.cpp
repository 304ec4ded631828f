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

#include "coset/debugger/decompose.hpp"

#include <stdexcept>

namespace coset::debugger {

namespace {

harness::Prediction train_and_classify(const Trainer& train, const corpus::Manifest& m,
                                       const std::string& tag,
                                       const corpus::CorpusEntry& entry) {
  auto c = train(m, tag);
  return c->classify(entry);
}

std::string shown(const harness::Prediction& p) { return p.error ? "<error>" : p.label; }

}  // namespace

DecompositionReport property_decomposition(const Trainer& train, const corpus::Manifest& m,
                                           std::string_view entry_id,
                                           const std::vector<oracle::PropertySpec>& specs) {
  if (specs.empty()) throw std::invalid_argument("no properties to decompose by");
  const auto* entry = m.find(entry_id);
  if (!entry) throw std::invalid_argument("unknown entry " + std::string(entry_id));
  const auto* task = corpus::find_task(entry->task);
  if (!task) throw std::invalid_argument("unknown task " + entry->task);

  DecompositionReport r;
  r.entry_id = entry->id;
  r.full_label = entry->label;
  auto full = train_and_classify(train, m, "full", *entry);
  r.full_prediction = shown(full);
  r.full_correct = !full.error && full.label == entry->label;

  for (const auto& spec : specs) {
    DecompositionRow row;
    row.spec = spec;
    if (!corpus::applies(*task, spec)) {
      row.note = "not defined for task " + task->id;
      r.rows.push_back(row);
      continue;
    }
    row.applicable = true;
    const auto relabeled = corpus::relabel_by_property(m, spec);
    const auto* target = relabeled.find(entry_id);
    row.expected = target->label;
    auto p = train_and_classify(train, relabeled, oracle::to_string(spec), *target);
    row.predicted = shown(p);
    row.correct = !p.error && p.label == row.expected;
    if (!row.correct) r.failing.push_back(oracle::to_string(spec));
    r.rows.push_back(row);
  }
  r.inconsistent = !r.full_correct && r.failing.empty();
  return r;
}

DecompositionReport property_decomposition(harness::BaselineKind kind,
                                           const corpus::Manifest& m,
                                           std::string_view entry_id,
                                           const std::vector<oracle::PropertySpec>& specs) {
  Trainer train = [kind](const corpus::Manifest& relabeled, const std::string&) {
    return harness::train_baseline(kind, relabeled.select(corpus::Split::Train));
  };
  return property_decomposition(train, m, entry_id, specs);
}

std::string narrative(const DecompositionReport& r) {
  std::string out = "entry " + r.entry_id + ": label " + r.full_label + ", predicted " +
                    r.full_prediction + (r.full_correct ? " (correct)" : " (wrong)") + "\n";
  for (const auto& row : r.rows) {
    out += "  " + oracle::to_string(row.spec) + ": ";
    if (!row.applicable) {
      out += "skipped, " + row.note + "\n";
      continue;
    }
    out += "expected " + row.expected + ", predicted " + row.predicted +
           (row.correct ? "" : "  <- misclassified") + "\n";
  }
  if (r.failing.empty()) {
    out += r.inconsistent ? "no single property explains the misclassification\n"
                          : "no failing property\n";
  } else {
    out += "failing:";
    for (const auto& f : r.failing) out += " " + f;
    out += "\n";
  }
  return out;
}

}  // namespace coset::debugger
