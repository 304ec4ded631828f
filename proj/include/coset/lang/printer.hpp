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
/// Deterministic pretty-printer. Output uses LF line endings, four-space
/// indentation, one statement per line and braces around every body, so
/// that `loc_count` and golden files stay stable across runs.

#pragma once

#include <cstddef>
#include <string>

#include "coset/lang/ast.hpp"

namespace coset::lang {

std::string print(const Program& p);
std::string print(const Function& f);
/// Prints `s` at the given indentation depth, one line per statement,
/// each terminated by '\n'.
std::string print(const Stmt& s, int depth = 0);
std::string print(const Expr& e);
std::string print(const Literal& l);

/// Number of non-blank lines of `print(p)`.
std::size_t loc_count(const Program& p);

}  // namespace coset::lang
