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
/// Tree-walking interpreter for MiniLang.
///
/// A step is one executed statement (blocks excluded); every evaluation of a
/// loop condition also counts as one step. Runs abort with a fault when the
/// step limit or the call-depth limit is exceeded, on integer division by
/// zero and on out-of-bounds indexing.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coset/interp/value.hpp"
#include "coset/lang/ast.hpp"

namespace coset::interp {

enum class FaultKind {
  DivByZero,
  IndexOutOfBounds,
  Timeout,
  StackOverflow,
  MissingReturn,
};

const char* to_string(FaultKind k);

struct Fault {
  FaultKind kind = FaultKind::Timeout;
  std::uint64_t step = 0;
  std::string message;
};

struct Outcome {
  std::optional<Value> returned;
  std::vector<Value> prints;
  std::optional<Fault> fault;
  std::uint64_t steps = 0;
  /// Arithmetic results that wrapped or were rounded at their declared
  /// width. Not part of equality.
  std::uint64_t width_events = 0;
  /// Arguments after the run; arrays reflect in-place updates.
  std::vector<Value> final_args;

  /// Compares return value, prints, fault kind and final arguments.
  friend bool operator==(const Outcome& x, const Outcome& y);
};

/// Same as `==` but values only need to agree modulo int/long and
/// float/double width.
bool equal_modulo_width(const Outcome& x, const Outcome& y);

std::string describe(const Outcome& o);

struct RunOptions {
  std::uint64_t step_limit = 10'000'000;
  int max_call_depth = 1000;
};

/// Hooks called while a program runs. Slots passed to `on_write` are
/// absolute: the frame base of the running function plus the local slot.
class ExecutionObserver {
 public:
  virtual ~ExecutionObserver() = default;
  virtual void on_statement(const lang::Stmt& /*s*/, int /*depth*/) {}
  virtual void on_write(int /*slot*/, const Value& /*v*/) {}
  /// After each completed iteration of a loop, with the loop's frame.
  virtual void on_iteration_end(const lang::Stmt& /*loop*/, int /*depth*/,
                                std::span<const Value> /*frame*/) {}
};

class Interpreter {
 public:
  /// Annotates a private copy of `p`; throws lang::SourceError when `p`
  /// does not validate.
  explicit Interpreter(const lang::Program& p, RunOptions options = {});

  /// Runs the entry function. Arguments are converted to the parameter
  /// types within their type group; arrays are copied first, so the
  /// caller's values are never modified.
  Outcome run(std::span<const Value> args,
              ExecutionObserver* observer = nullptr) const;

  const lang::Program& program() const { return program_; }
  const RunOptions& options() const { return options_; }

 private:
  lang::Program program_;
  RunOptions options_;
};

Outcome run(const lang::Program& p, std::span<const Value> args,
            RunOptions options = {});

}  // namespace coset::interp
