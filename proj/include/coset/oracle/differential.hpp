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
/// Differential execution of a program and its transformed version.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coset/interp/interpreter.hpp"
#include "coset/lang/ast.hpp"

namespace coset::oracle {

using Input = std::vector<interp::Value>;
using Suite = std::vector<Input>;

enum class Mode { Exact, Approximating, ExpectDivergence };

const char* to_string(Mode m);

struct InputResult {
  std::size_t input = 0;
  interp::Outcome original;
  interp::Outcome transformed;
  /// Exact mode and expect-divergence use `==`; approximating mode
  /// compares modulo int/long and float/double width.
  bool equal = false;
  /// Approximating mode: the divergence coincides with a wrap-around or
  /// rounding in one of the runs.
  bool flagged = false;
  /// Expect-divergence mode: the input reaches one of the original
  /// program's leading guard clauses.
  bool guard = false;
};

struct EquivalenceVerdict {
  Mode mode = Mode::Exact;
  std::vector<InputResult> results;
  bool pass = false;
  /// Index into `results` of the first input that shows a divergence
  /// (for expect-divergence, the first divergent guard input).
  std::optional<std::size_t> witness;

  std::size_t divergences() const;
  std::size_t flagged() const;
};

/// Pass/fail and witness computed from per-input results only.
void decide(EquivalenceVerdict& v);

/// Runs both programs on every input. Throws std::invalid_argument when
/// `inputs` is empty or the entry functions take different numbers of
/// parameters.
EquivalenceVerdict differential_check(const lang::Program& original,
                                      const lang::Program& transformed,
                                      const Suite& inputs, Mode mode,
                                      const interp::RunOptions& options = {});

/// Whether running `p` on `input` returns from one of its leading guard
/// clauses.
bool triggers_guard(const lang::Program& p, const Input& input,
                    const interp::RunOptions& options = {});

/// First candidate on which the programs disagree under `mode`, searched
/// in order.
std::optional<std::size_t> find_witness(const lang::Program& original,
                                        const lang::Program& transformed,
                                        const Suite& candidates, Mode mode,
                                        const interp::RunOptions& options = {});

std::string describe(const EquivalenceVerdict& v);

}  // namespace coset::oracle
