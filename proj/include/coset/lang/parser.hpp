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
#include <stdexcept>
#include <string_view>

#include "coset/lang/ast.hpp"
#include "coset/lang/diagnostic.hpp"

namespace coset::lang {

struct ParseResult {
  std::optional<Program> program;
  Diagnostics diagnostics;

  bool ok() const { return program.has_value(); }
};

/// Parses a MiniLang compilation unit. Stops at the first syntax error.
/// Only syntax is checked here; see validate() for typing rules.
ParseResult parse(std::string_view text);

class SourceError : public std::runtime_error {
 public:
  SourceError(const std::string& what, Diagnostics diags)
      : std::runtime_error(what), diagnostics_(std::move(diags)) {}
  const Diagnostics& diagnostics() const { return diagnostics_; }

 private:
  Diagnostics diagnostics_;
};

/// parse() followed by validate(); throws SourceError on any diagnostic.
Program parse_checked(std::string_view text);

/// True for names usable as variables: identifier syntax, not a keyword.
bool is_identifier(std::string_view name);

}  // namespace coset::lang
