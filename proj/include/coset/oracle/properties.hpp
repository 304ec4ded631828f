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
/// Semantic properties decided by running a program on input suites.
///
/// The sorting properties look at the entry's first array parameter (or
/// the returned array when the entry returns one):
///
///   P1  the estimated complexity class equals a target class
///   P2  the array is sorted when the run ends
///   P3  some outermost loop keeps a sorted suffix: after i completed
///       iterations, a[j-1] <= a[j] for every j in [len-i, len-1]
///   P4  some outermost loop keeps a prefix of minima: after i completed
///       iterations, a[0..i) equals the i smallest input values in order
///
/// P3 and P4 require the entry to contain a nested loop. The functional
/// properties compare the return value against a reference on inputs with
/// a non-empty array.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coset/lang/ast.hpp"
#include "coset/oracle/complexity.hpp"
#include "coset/oracle/differential.hpp"

namespace coset::oracle {

enum class PropertyId {
  Complexity,
  Sorted,
  BubbleInvariant,
  SelectionInvariant,
  ReturnsMax,
  ReturnsMin,
  ReturnsRange,
  FindsKey,
};

struct PropertySpec {
  PropertyId id = PropertyId::Sorted;
  ComplexityClass target = ComplexityClass::Quadratic;  // Complexity only

  friend bool operator==(const PropertySpec&, const PropertySpec&) = default;
};

/// `P1=QUADRATIC`, `P2`, `P3`, `P4`, `returns-max`, `returns-min`,
/// `returns-range`, `finds-key`.
std::string to_string(const PropertySpec& s);
std::optional<PropertySpec> parse_property(std::string_view s);

inline PropertySpec complexity_is(ComplexityClass c) {
  return {PropertyId::Complexity, c};
}
inline constexpr PropertySpec kSorted{PropertyId::Sorted};
inline constexpr PropertySpec kBubbleInvariant{PropertyId::BubbleInvariant};
inline constexpr PropertySpec kSelectionInvariant{PropertyId::SelectionInvariant};

struct PropertyResult {
  bool applicable = true;
  bool holds = false;
  std::optional<Input> witness;  // an input on which the property fails
  std::size_t inputs_checked = 0;
  std::string note;
};

struct PropertyOptions {
  ComplexityOptions complexity;
  interp::RunOptions run;
};

PropertyResult check_property(const lang::Program& p, const PropertySpec& spec,
                              const Suite& suite,
                              const PropertyOptions& options = {});

bool check_sorted_postcondition(const lang::Program& p, const Suite& suite);
/// nullopt when the entry has no loop nest.
std::optional<bool> check_bubble_invariant(const lang::Program& p,
                                           const Suite& suite);
std::optional<bool> check_selection_invariant(const lang::Program& p,
                                              const Suite& suite);

/// Every permutation of 1..n for n = 0..max_len as one int[] argument.
Suite permutation_suite(std::size_t max_len);

/// Wraps int vectors as single int[] arguments.
Suite array_suite(const std::vector<std::vector<int>>& arrays);

}  // namespace coset::oracle
