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
/// Source-to-source transformations over MiniLang programs.
///
/// Every pass takes a valid program and returns a TransformResult. When a
/// pass finds nothing to rewrite it reports `applicable == false` and
/// returns the input unchanged. Untouched nodes keep their ids; nodes a pass
/// creates get fresh ids from the program's counter.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coset/lang/ast.hpp"

namespace coset::transforms {

enum class TransformKind {
  CVP,
  DCE,
  LU,
  HOIST,
  VR,
  NCS,
  CFR,
  CSU,
  TYPE_APPROX,
  API_APPROX,
  STRIP_ERROR_HANDLING,
};

enum class Contract { Preserving, Approximating, Changing };

Contract contract_of(TransformKind k);
const char* to_string(TransformKind k);
const char* to_string(Contract c);
std::optional<TransformKind> parse_kind(std::string_view name);
std::span<const TransformKind> all_kinds();
std::span<const TransformKind> preserving_kinds();

struct Edit {
  lang::Span site;  // span in the input program's source
  lang::NodeId node = 0;
  std::string description;
};

struct TransformResult {
  lang::Program program;
  bool applicable = false;
  std::vector<Edit> edits;
  std::map<std::string, std::string> config;
};

enum class CsuDirection { SwitchToIf, ForToWhile, All };
enum class TypeMode { IntToLong, LongToInt, FloatToDouble, DoubleToFloat };

const char* to_string(CsuDirection d);
const char* to_string(TypeMode m);
std::optional<CsuDirection> parse_csu_direction(std::string_view s);
std::optional<TypeMode> parse_type_mode(std::string_view s);

TransformResult cvp(const lang::Program& p);
TransformResult dce(const lang::Program& p);
TransformResult loop_unroll(const lang::Program& p, int factor = 2);
TransformResult hoist(const lang::Program& p);

/// Renames every local variable and parameter to `v<k>`; the assignment of
/// numbers to bindings is a seeded permutation.
TransformResult rename_variables(const lang::Program& p, std::uint64_t seed);
/// Exchanges the names `a` and `b` throughout `function` (all functions
/// when empty).
TransformResult swap_variables(const lang::Program& p, std::string_view a,
                               std::string_view b,
                               std::string_view function = {});
/// Renames every binding of `from` in `function` to `to`. Not applicable
/// when `to` already names a variable or function there.
TransformResult rename_variable(const lang::Program& p, std::string_view from,
                                std::string_view to,
                                std::string_view function = {});

TransformResult simplify_nested_conditions(const lang::Program& p);
TransformResult remove_control_flags(const lang::Program& p);

/// `site` restricts the rewrite to one node: a switch or for statement for
/// CSU, a declaration or parameter for type approximation, a call for API
/// substitution and an if statement for guard stripping.
TransformResult unify_control_statements(
    const lang::Program& p, CsuDirection direction = CsuDirection::All,
    std::optional<lang::NodeId> site = std::nullopt);
TransformResult approximate_types(const lang::Program& p, TypeMode mode,
                                  std::optional<lang::NodeId> site = std::nullopt);
TransformResult substitute_api(const lang::Program& p,
                               std::optional<lang::NodeId> site = std::nullopt);
TransformResult strip_error_handling(
    const lang::Program& p, std::optional<lang::NodeId> site = std::nullopt);

/// Guard clauses `strip_error_handling` would remove from the entry
/// function, in order.
std::vector<const lang::Stmt*> leading_guards(const lang::Program& p);

struct TransformConfig {
  int unroll_factor = 2;
  std::uint64_t seed = 0;
  CsuDirection csu = CsuDirection::All;
  TypeMode type_mode = TypeMode::IntToLong;
  std::optional<lang::NodeId> site;
};

TransformResult apply(TransformKind kind, const lang::Program& p,
                      const TransformConfig& config = {});

}  // namespace coset::transforms
