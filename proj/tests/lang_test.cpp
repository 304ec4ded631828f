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

#include <gtest/gtest.h>

#include "coset/lang/parser.hpp"
#include "coset/lang/printer.hpp"
#include "coset/lang/sema.hpp"
#include "fixtures.hpp"

namespace coset {
namespace {

using lang::parse;

std::string first_code(std::string_view src) {
  auto r = parse(src);
  if (!r.ok()) return r.diagnostics.front().code;
  auto d = lang::validate(*r.program);
  return d.empty() ? "" : d.front().code;
}

TEST(Parser, CanonicalSourcesRoundTrip) {
  for (auto src : {testing::kBubble, testing::kInsertion, testing::kSelection,
                   testing::kMaxScan}) {
    auto p = lang::parse_checked(src);
    EXPECT_EQ(lang::print(p), src);
    EXPECT_EQ(lang::parse_checked(lang::print(p)), p);
  }
}

TEST(Parser, BracelessBodiesPrintWithBraces) {
  auto p = lang::parse_checked(
      "int f(int a) { if (a > 0) return 1; else return 2; }");
  EXPECT_EQ(lang::print(p),
            "int f(int a) {\n    if (a > 0) {\n        return 1;\n    } else {\n"
            "        return 2;\n    }\n}\n");
}

TEST(Parser, SyntaxErrorHasPosition) {
  auto r = parse("int f(int a) { return a +; }");
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "syntax");
  EXPECT_EQ(r.diagnostics[0].span.line, 1u);
  EXPECT_EQ(r.diagnostics[0].span.column, 26u);
}

TEST(Parser, ParseCheckedThrowsWithDiagnostics) {
  try {
    lang::parse_checked("int f(int[] a) { return y; }");
    FAIL() << "expected SourceError";
  } catch (const lang::SourceError& e) {
    ASSERT_FALSE(e.diagnostics().empty());
    EXPECT_EQ(e.diagnostics()[0].code, "undeclared");
  }
}

TEST(Sema, RejectsIllFormedPrograms) {
  EXPECT_EQ(first_code("int f(int[] a) { int x = 1; int x = 2; return x; }"), "redeclared");
  EXPECT_EQ(first_code("int f(int[] a) { if (true) { return 1; } }"), "missing-return");
  EXPECT_EQ(first_code("int f(int a) { switch (a) { case 1: case 2: return 1; } return 0; }"),
            "fallthrough");
  EXPECT_EQ(first_code("int f(int a) { break; return a; }"), "misplaced-jump");
  EXPECT_EQ(first_code("int f(int[] a) { float s = 1.5; Print(s); return 0; }"), "narrowing");
}

TEST(Sema, SiblingScopesMayReuseNames) {
  EXPECT_EQ(first_code("int f(int a) { for (int i = 0; i < 2; i += 1) { } "
                       "for (int i = 0; i < 2; i += 1) { } return a; }"),
            "");
}

TEST(Sema, WideningIsImplicit) {
  EXPECT_EQ(first_code("int f(int[] a) { double s = 1.5f; long n = Length(a); Print(s); "
                       "Print(n); return 0; }"),
            "");
}

TEST(Ast, EqualityIgnoresSpansAndIds) {
  auto a = lang::parse_checked("int f(int a) { return a; }");
  auto b = lang::parse_checked("int   f(int a)\n{\n  return a;\n}");
  EXPECT_EQ(a, b);
  b.entry().body[0].id += 100;
  EXPECT_EQ(a, b);
  b.entry().body[0].expr->name = "b";
  EXPECT_FALSE(a == b);
}

TEST(Printer, LocCountsNonBlankLines) {
  auto p = lang::parse_checked(testing::kBubble);
  EXPECT_EQ(lang::loc_count(p), 13u);
}

TEST(Printer, LiteralsKeepTheirType) {
  auto p = lang::parse_checked(
      "int f(int[] a) { float x = 0.5f; double y = 2.0; char c = 'q'; "
      "Sort(a, DESC); Print(x); Print(y); Print(c); return 0; }");
  auto text = lang::print(p);
  EXPECT_NE(text.find("0.5f"), std::string::npos);
  EXPECT_NE(text.find("2.0"), std::string::npos);
  EXPECT_NE(text.find("'q'"), std::string::npos);
  EXPECT_NE(text.find("DESC"), std::string::npos);
  EXPECT_EQ(lang::parse_checked(text), p);
}

}  // namespace
}  // namespace coset
