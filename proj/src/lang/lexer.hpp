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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coset/lang/diagnostic.hpp"

namespace coset::lang {

enum class Tok {
  End,
  Ident,
  Keyword,
  IntLit,     // text holds digits; `long_suffix` set for 5L
  FloatLit,   // `float_suffix` set for 1.5f
  CharLit,
  StringLit,
  Punct,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;   // identifier/keyword/punct spelling, decoded literal
  Span span;
  std::uint64_t int_value = 0;
  double float_value = 0.0;
  bool long_suffix = false;
  bool float_suffix = false;
  bool int_overflow = false;

  bool is(Tok k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(Tok::Punct, t); }
  bool is_keyword(std::string_view t) const { return is(Tok::Keyword, t); }
};

/// Splits `source` into tokens. Lexical errors are appended to `diags`; the
/// returned vector always ends with an End token.
bool is_keyword(std::string_view s);

std::vector<Token> tokenize(std::string_view source, Diagnostics& diags);

std::string describe(const Token& t);

}  // namespace coset::lang
