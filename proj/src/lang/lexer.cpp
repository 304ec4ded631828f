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

#include "lexer.hpp"

#include <array>
#include <cctype>
#include <cstdlib>

namespace coset::lang {

namespace {

constexpr std::array<std::string_view, 22> kKeywords{
    "void", "int",    "long",  "float",    "double", "bool",
    "char", "string", "if",    "else",     "switch", "case",
    "default", "while", "for", "break",    "continue", "return",
    "true", "false",  "ASC",   "DESC"};

// Longest first so that "<=" wins over "<".
constexpr std::array<std::string_view, 27> kPuncts{
    "&&", "||", "<=", ">=", "==", "!=", "+=", "-=", "*=", "/=", "%=",
    "(",  ")",  "{",  "}",  "[",  "]",  ";",  ",",  ":",  "+",  "-",
    "*",  "/",  "%",  "<",  ">"};

class Lexer {
 public:
  Lexer(std::string_view src, Diagnostics& diags) : src_(src), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      Token t;
      t.span = here(0);
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      std::size_t start = pos_;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_'))
          advance();
        t.text = std::string(src_.substr(start, pos_ - start));
        t.kind = is_keyword(t.text) ? Tok::Keyword : Tok::Ident;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number(t);
      } else if (c == '\'') {
        lex_char(t);
      } else if (c == '"') {
        lex_string(t);
      } else if (c == '=' && !(peek(1) == '=')) {
        advance();
        t.kind = Tok::Punct;
        t.text = "=";
      } else if (c == '!' && peek(1) != '=') {
        advance();
        t.kind = Tok::Punct;
        t.text = "!";
      } else {
        bool matched = false;
        for (auto p : kPuncts) {
          if (src_.substr(pos_, p.size()) == p) {
            for (std::size_t i = 0; i < p.size(); ++i) advance();
            t.kind = Tok::Punct;
            t.text = std::string(p);
            matched = true;
            break;
          }
        }
        if (!matched) {
          advance();
          error(start, "unexpected character '" + std::string(1, c) + "'");
          continue;
        }
      }
      t.span.length = static_cast<std::uint32_t>(pos_ - start);
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  Span here(std::uint32_t len) const {
    return Span{static_cast<std::uint32_t>(pos_), len,
                static_cast<std::uint32_t>(line_),
                static_cast<std::uint32_t>(pos_ - line_start_ + 1)};
  }

  void error(std::size_t at, std::string msg) {
    Span s{static_cast<std::uint32_t>(at), 1, static_cast<std::uint32_t>(line_),
           static_cast<std::uint32_t>(at - line_start_ + 1)};
    diags_.push_back({Severity::Error, s, std::move(msg), "lex"});
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        std::size_t start = pos_;
        advance();
        advance();
        while (pos_ < src_.size() && !(src_[pos_] == '*' && peek(1) == '/'))
          advance();
        if (pos_ >= src_.size()) {
          error(start, "unterminated comment");
          return;
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  void lex_number(Token& t) {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek(0)))) advance();
    bool is_float = false;
    if (peek(0) == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      is_float = true;
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek(0)))) advance();
    }
    if (peek(0) == 'e' || peek(0) == 'E') {
      std::size_t save = pos_;
      std::size_t save_line = line_, save_ls = line_start_;
      advance();
      if (peek(0) == '+' || peek(0) == '-') advance();
      if (std::isdigit(static_cast<unsigned char>(peek(0)))) {
        is_float = true;
        while (std::isdigit(static_cast<unsigned char>(peek(0)))) advance();
      } else {
        pos_ = save;
        line_ = save_line;
        line_start_ = save_ls;
      }
    }
    std::string text(src_.substr(start, pos_ - start));
    t.text = text;
    if (is_float) {
      t.kind = Tok::FloatLit;
      t.float_value = std::strtod(text.c_str(), nullptr);
      if (peek(0) == 'f' || peek(0) == 'F') {
        t.float_suffix = true;
        advance();
      }
    } else {
      t.kind = Tok::IntLit;
      std::uint64_t v = 0;
      for (char d : text) {
        std::uint64_t nv = v * 10 + static_cast<std::uint64_t>(d - '0');
        if (nv / 10 != v) t.int_overflow = true;
        v = nv;
      }
      t.int_value = v;
      if (peek(0) == 'L' || peek(0) == 'l') {
        t.long_suffix = true;
        advance();
      } else if (peek(0) == 'f' || peek(0) == 'F') {
        t.kind = Tok::FloatLit;
        t.float_suffix = true;
        t.float_value = static_cast<double>(v);
        advance();
      }
    }
  }

  bool lex_escape(char& out) {
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    advance();
    if (c != '\\') {
      out = c;
      return true;
    }
    if (pos_ >= src_.size()) return false;
    char e = src_[pos_];
    advance();
    switch (e) {
      case 'n': out = '\n'; return true;
      case 't': out = '\t'; return true;
      case 'r': out = '\r'; return true;
      case '0': out = '\0'; return true;
      case '\\': out = '\\'; return true;
      case '\'': out = '\''; return true;
      case '"': out = '"'; return true;
      default: return false;
    }
  }

  void lex_char(Token& t) {
    std::size_t start = pos_;
    advance();
    char c = 0;
    if (!lex_escape(c) || peek(0) != '\'') {
      error(start, "malformed character literal");
      while (pos_ < src_.size() && src_[pos_] != '\'' && src_[pos_] != '\n')
        advance();
      if (peek(0) == '\'') advance();
      t.kind = Tok::CharLit;
      return;
    }
    advance();
    t.kind = Tok::CharLit;
    t.text = std::string(1, c);
  }

  void lex_string(Token& t) {
    std::size_t start = pos_;
    advance();
    std::string value;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\n') break;
      char c = 0;
      if (!lex_escape(c)) {
        error(start, "malformed escape in string literal");
        break;
      }
      value.push_back(c);
    }
    if (peek(0) != '"') {
      error(start, "unterminated string literal");
    } else {
      advance();
    }
    t.kind = Tok::StringLit;
    t.text = std::move(value);
  }

  std::string_view src_;
  Diagnostics& diags_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

bool is_keyword(std::string_view s) {
  for (auto k : kKeywords)
    if (k == s) return true;
  return false;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || is_keyword(s)) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(s[0])) return false;
  for (char c : s)
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

std::vector<Token> tokenize(std::string_view source, Diagnostics& diags) {
  return Lexer(source, diags).run();
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Keyword: return "'" + t.text + "'";
    case Tok::IntLit:
    case Tok::FloatLit: return "number '" + t.text + "'";
    case Tok::CharLit: return "character literal";
    case Tok::StringLit: return "string literal";
    case Tok::Punct: return "'" + t.text + "'";
  }
  return "token";
}

}  // namespace coset::lang
