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

#include "coset/lang/ast.hpp"
#include "coset/lang/diagnostic.hpp"

namespace coset::lang {

/// Type-checks `p`. The result is empty iff the program is well-typed:
/// declarations precede uses, no shadowing, conditions are bool, indices
/// are int/long, switch labels are distinct constants with non-empty
/// bodies, non-void functions always return, and values only flow into
/// equal types or widen int -> long and float -> double.
Diagnostics validate(const Program& p);

/// Writes slot numbers, callee indices and expression types into `p`.
/// Throws SourceError if `p` does not validate.
void annotate(Program& p);

/// Whether a value of type `from` may be stored into `to` implicitly.
bool assignable(Type to, Type from);

/// Whether a statement list always ends in return on every path.
bool always_returns(const std::vector<Stmt>& body);

}  // namespace coset::lang
