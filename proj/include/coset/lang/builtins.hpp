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

#pragma once

#include <optional>
#include <string_view>

namespace coset::lang {

enum class BuiltinId {
  Sort,             // Sort(a) / Sort(a, comparer); sorts in place
  Min,              // Min(a): smallest element, faults on empty
  Max,              // Max(a): largest element, faults on empty
  Length,           // Length(a): int
  ElementAt,        // ElementAt(a, i) == a[i]
  GetNumericValue,  // digit value of a char, -1 for non-digits
  Print,            // appends its argument to the program output
  ToInt,            // code point of a char
};

struct BuiltinInfo {
  BuiltinId id;
  std::string_view name;
  bool pure;           // no observable effect besides the result
  bool may_fault;      // can abort the program
};

/// Looks up a builtin by name.
std::optional<BuiltinInfo> find_builtin(std::string_view name);

}  // namespace coset::lang
