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
/// Deterministic generation of labelled program variants.
///
/// Variation axes: names drawn from role pools, for or while loops, the
/// order of a logging statement and an independent declaration, temporary
/// variables (a length variable, one or two swap temporaries, a step
/// constant), a leading guard clause, switch or if dispatch on small
/// sizes, nested defensive checks, ElementAt or indexing, comparison
/// direction and algorithm sub-variants. Programs come in families of
/// three: a base, the base with the logging statement moved past the
/// independent declaration, and the base with two variables' names swapped.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "coset/corpus/catalog.hpp"

namespace coset::corpus {

struct GenerateOptions {
  /// Check every program against its label before emitting it.
  bool certify = true;
};

/// `count` distinct programs for `label`. Throws std::invalid_argument for
/// an unknown task/label pair and std::runtime_error when a generated
/// program fails its own label check.
std::vector<CorpusEntry> generate(std::string_view task, std::string_view label,
                                  std::size_t count, std::uint64_t seed,
                                  const GenerateOptions& options = {});

/// `count` programs for every label of `task` (every task when empty).
std::vector<CorpusEntry> generate_task(std::string_view task, std::size_t count,
                                       std::uint64_t seed,
                                       const GenerateOptions& options = {});

}  // namespace coset::corpus
