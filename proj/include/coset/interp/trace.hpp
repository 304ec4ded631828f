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
/// Execution traces: the sequence of state changes one run performs.
///
/// A snapshot is recorded after every executed declaration or assignment
/// (for-loop init and step included) and after `Sort` on an array variable.
/// Snapshots identify variables by absolute frame slot, never by name, so
/// alpha-renamed programs produce equal traces. An element write records a
/// copy of the whole array.
///
/// Serialized form (version 1):
///
///     # coset-trace v1 steps=<step_total>
///     <index>,<slot>,<value>
///
/// one line per snapshot, where index is the ordinal of the state change
/// and value uses the literal syntax of the language (`[1 2 3]` for arrays).

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "coset/interp/interpreter.hpp"

namespace coset::interp {

struct StateSnapshot {
  std::uint64_t index = 0;
  int slot = 0;
  Value value;

  friend bool operator==(const StateSnapshot&, const StateSnapshot&) = default;
};

struct Trace {
  std::vector<StateSnapshot> snapshots;
  std::uint64_t step_total = 0;

  /// Slot -> value after the first `k` snapshots.
  std::map<int, Value> state_at(std::size_t k) const;
  std::map<int, Value> final_state() const { return state_at(snapshots.size()); }

  /// Drops writes of bool values and renumbers slots densely in order of
  /// first appearance. Step counts are not part of the projection.
  Trace data_projection() const;

  friend bool operator==(const Trace&, const Trace&) = default;
};

struct TracedRun {
  Outcome outcome;
  Trace trace;
};

TracedRun trace(const Interpreter& interp, std::span<const Value> args);
TracedRun trace(const lang::Program& p, std::span<const Value> args,
                RunOptions options = {});

std::string serialize(const Trace& t);

/// Size in bytes used by the scalability metric: 15 bytes per printed line
/// of code, 20 bytes per recorded state change.
std::size_t normalized_size(const lang::Program& p);
std::size_t normalized_size(const Trace& t);

inline constexpr std::size_t kBytesPerLine = 15;
inline constexpr std::size_t kBytesPerStateChange = 20;

}  // namespace coset::interp
