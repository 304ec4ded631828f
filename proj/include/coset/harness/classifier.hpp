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
/// The classifier seam. Built-in baselines and external processes both
/// implement `Classifier`; evaluation code never needs to know which.

#pragma once

#include <memory>
#include <string>

#include "coset/corpus/catalog.hpp"

namespace coset::harness {

/// One classification. An error prediction carries no label and always
/// counts as wrong.
struct Prediction {
  std::string label;
  bool error = false;
  std::string message;

  static Prediction of(std::string label) { return {std::move(label), false, {}}; }
  static Prediction failure(std::string why) { return {{}, true, std::move(why)}; }
};

class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual std::string name() const = 0;
  virtual Prediction classify(const corpus::CorpusEntry& entry) = 0;
  /// An independent handle with the same trained state, used by parallel
  /// workers. A handle is never shared between threads.
  virtual std::unique_ptr<Classifier> clone() const = 0;
};

}  // namespace coset::harness
