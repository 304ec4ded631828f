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

#include "coset/lang/builtins.hpp"

#include <array>

namespace coset::lang {

namespace {
constexpr std::array<BuiltinInfo, 8> kBuiltins{{
    {BuiltinId::Sort, "Sort", false, false},
    {BuiltinId::Min, "Min", true, true},
    {BuiltinId::Max, "Max", true, true},
    {BuiltinId::Length, "Length", true, false},
    {BuiltinId::ElementAt, "ElementAt", true, true},
    {BuiltinId::GetNumericValue, "GetNumericValue", true, false},
    {BuiltinId::Print, "Print", false, false},
    {BuiltinId::ToInt, "ToInt", true, false},
}};
}  // namespace

std::optional<BuiltinInfo> find_builtin(std::string_view name) {
  for (const auto& b : kBuiltins)
    if (b.name == name) return b;
  return std::nullopt;
}

}  // namespace coset::lang
