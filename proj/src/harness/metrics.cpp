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

#include "coset/harness/metrics.hpp"

#include <cstdio>
#include <set>
#include <stdexcept>

namespace coset::harness {

double f1_score(double precision, double recall) {
  return precision + recall == 0 ? 0.0 : 2 * precision * recall / (precision + recall);
}

EvalReport score(const std::vector<std::string>& truth,
                 const std::vector<Prediction>& predicted) {
  if (truth.empty()) throw std::invalid_argument("empty test set");
  if (truth.size() != predicted.size())
    throw std::invalid_argument("labels and predictions differ in length");
  EvalReport r;
  r.total = truth.size();
  std::set<std::string> names(truth.begin(), truth.end());
  for (std::size_t k = 0; k < truth.size(); ++k) {
    const auto& p = predicted[k];
    if (p.error) {
      ++r.errors;
      ++r.confusion[truth[k]][kErrorColumn];
      continue;
    }
    names.insert(p.label);
    ++r.confusion[truth[k]][p.label];
    if (p.label == truth[k]) ++r.correct;
  }
  r.accuracy = static_cast<double>(r.correct) / static_cast<double>(r.total);

  double sum = 0;
  for (const auto& name : names) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t k = 0; k < truth.size(); ++k) {
      const bool said = !predicted[k].error && predicted[k].label == name;
      const bool is = truth[k] == name;
      tp += said && is;
      fp += said && !is;
      fn += !said && is;
    }
    LabelScore s;
    s.label = name;
    s.support = tp + fn;
    s.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    s.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    s.f1 = f1_score(s.precision, s.recall);
    sum += s.f1;
    r.labels.push_back(s);
  }
  r.macro_f1 = sum / static_cast<double>(r.labels.size());
  return r;
}

double StabilityRow::rate() const {
  return applicable == 0 ? 0.0
                         : static_cast<double>(flipped) / static_cast<double>(applicable);
}

std::string percent(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", rate * 100.0);
  return buf;
}

}  // namespace coset::harness
