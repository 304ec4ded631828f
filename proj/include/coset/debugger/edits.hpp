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
/// Atomic edits: the units the flip search combines.
///
/// Name edits (rename, swap) act on the entry function's variables; site
/// edits (type swap, API swap, switch to if, guard removal) act on one node
/// of the program they were enumerated from. Two name edits conflict when
/// they share a name, two site edits when their spans overlap. Node ids of
/// untouched nodes survive every rewrite, so a conflict-free set can be
/// applied edit by edit in source order.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coset/lang/ast.hpp"
#include "coset/transforms/transforms.hpp"

namespace coset::debugger {

enum class EditKind { Swap, Rename, TypeSwap, ApiSwap, SwitchToIf, GuardRemoval };

const char* to_string(EditKind k);

struct AtomicEdit {
  EditKind kind = EditKind::Rename;
  transforms::Contract contract = transforms::Contract::Preserving;
  lang::Span site;
  lang::NodeId node = 0;
  std::string first;   // rename: old name; swap: one name
  std::string second;  // rename: new name; swap: the other name
  transforms::TypeMode type_mode = transforms::TypeMode::IntToLong;

  std::string describe() const;
  friend bool operator==(const AtomicEdit&, const AtomicEdit&) = default;
};

bool conflicts(const AtomicEdit& a, const AtomicEdit& b);

struct UniverseOptions {
  /// Also offer removal of each leading guard clause.
  bool guard_probe = false;
};

/// Every edit that applies on its own to `p`, ordered by kind, then by site.
std::vector<AtomicEdit> edit_universe(const lang::Program& p, const UniverseOptions& options = {});

/// Applies `edits` in source order. Returns nullopt when two edits conflict
/// or one of them no longer applies.
std::optional<lang::Program> apply_edits(const lang::Program& p,
                                         const std::vector<AtomicEdit>& edits);

}  // namespace coset::debugger
