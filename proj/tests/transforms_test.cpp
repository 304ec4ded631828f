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

#include <string>

#include "coset/interp/interpreter.hpp"
#include "coset/lang/printer.hpp"
#include "coset/transforms/transforms.hpp"
#include "fixtures.hpp"

namespace coset {
namespace {

using interp::Value;
using transforms::TransformKind;

constexpr std::string_view kArith =
    "int f(int a) { int k = 3; int unused = a * 2; int s = a + k; return s; }";
constexpr std::string_view kNested =
    "int f(int a) { if (a > 0) { if (a < 10) { return 1; } } return 0; }";
constexpr std::string_view kFlag =
    "int f(int[] a) { bool found = false; int i = 0; while (i < Length(a) && !found) { "
    "if (a[i] == 3) { found = true; } else { i += 1; } } return i; }";
constexpr std::string_view kSwitch =
    "int f(int a) { int r = 0; switch (a) { case 1: r = 10; case 2: r = 20; default: r = 5; } "
    "return r; }";
constexpr std::string_view kGuarded =
    "int f(int[] a) { if (Length(a) == 0) { return -1; } Sort(a, ASC); return ElementAt(a, 0); }";
constexpr std::string_view kLoop =
    "int f(int[] a) { int s = 0; for (int i = 0; i < Length(a); i += 1) { s += a[i] * 2; } "
    "return s; }";

std::string body(const lang::Program& p) { return lang::print(p); }

oracle::Suite scalar_suite() {
  oracle::Suite out;
  for (int a = -3; a <= 12; ++a) out.push_back({Value::of_int(a)});
  return out;
}

// Direct comparison with the interpreter, independent of the oracle module.
void expect_same_behavior(const lang::Program& p, const lang::Program& q,
                          const oracle::Suite& suite) {
  for (const auto& in : suite) {
    auto a = interp::run(p, in);
    auto b = interp::run(q, in);
    ASSERT_TRUE(a == b) << body(q) << interp::describe(a) << " vs " << interp::describe(b);
  }
}

TEST(Registry, NamesRoundTrip) {
  for (auto k : transforms::all_kinds()) {
    auto parsed = transforms::parse_kind(transforms::to_string(k));
    ASSERT_TRUE(parsed);
    EXPECT_EQ(*parsed, k);
  }
  EXPECT_EQ(transforms::preserving_kinds().size(), 8u);
  EXPECT_EQ(transforms::contract_of(TransformKind::VR), transforms::Contract::Preserving);
  EXPECT_EQ(transforms::contract_of(TransformKind::TYPE_APPROX),
            transforms::Contract::Approximating);
  EXPECT_EQ(transforms::contract_of(TransformKind::STRIP_ERROR_HANDLING),
            transforms::Contract::Changing);
  EXPECT_FALSE(transforms::parse_kind("NOPE"));
}

TEST(Cvp, PropagatesConstants) {
  auto p = testing::parse(kArith);
  auto r = transforms::cvp(p);
  ASSERT_TRUE(r.applicable);
  EXPECT_NE(body(r.program).find("int s = a + 3;"), std::string::npos);
  expect_same_behavior(p, r.program, scalar_suite());
}

TEST(Dce, RemovesUnusedDeclaration) {
  auto p = testing::parse(kArith);
  auto r = transforms::dce(p);
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(body(r.program).find("unused"), std::string::npos);
  expect_same_behavior(p, r.program, scalar_suite());
}

TEST(Dce, DropsDeadInitializer) {
  auto p = testing::parse(kSwitch);
  auto r = transforms::dce(p);
  ASSERT_TRUE(r.applicable);
  EXPECT_NE(body(r.program).find("int r;"), std::string::npos);
  expect_same_behavior(p, r.program, scalar_suite());
}

TEST(Dce, Idempotent) {
  for (auto src : {kArith, kSwitch, testing::kBubble, testing::kInsertion}) {
    auto once = transforms::dce(testing::parse(src)).program;
    auto twice = transforms::dce(once);
    EXPECT_FALSE(twice.applicable) << body(once);
    EXPECT_EQ(body(twice.program), body(once));
  }
}

TEST(LoopUnroll, KeepsRemainderLoop) {
  auto p = testing::parse(kLoop);
  auto r = transforms::loop_unroll(p);
  ASSERT_TRUE(r.applicable);
  EXPECT_NE(body(r.program).find("i + 1 < Length(a)"), std::string::npos);
  expect_same_behavior(p, r.program, testing::small_arrays(4));
  auto r3 = transforms::loop_unroll(p, 3);
  ASSERT_TRUE(r3.applicable);
  expect_same_behavior(p, r3.program, testing::small_arrays(4));
}

TEST(Hoist, MovesInvariantBound) {
  auto p = testing::parse(testing::kBubble);
  auto r = transforms::hoist(p);
  ASSERT_TRUE(r.applicable);
  EXPECT_NE(body(r.program).find("= n - 1;"), std::string::npos);
  expect_same_behavior(p, r.program, testing::small_arrays(4));
}

TEST(Hoist, LeavesDivisionInPlace) {
  auto p = testing::parse(
      "int f(int[] a, int d) { int s = 0; for (int i = 0; i < Length(a); i += 1) { "
      "s += a[i] / d; } return s; }");
  EXPECT_FALSE(transforms::hoist(p).applicable);
}

TEST(Rename, SeededAndConsistent) {
  auto p = testing::parse(testing::kSelection);
  auto a = transforms::rename_variables(p, 5);
  auto b = transforms::rename_variables(p, 5);
  ASSERT_TRUE(a.applicable);
  EXPECT_EQ(body(a.program), body(b.program));
  EXPECT_EQ(body(a.program).find(" m "), std::string::npos);
  expect_same_behavior(p, a.program, testing::small_arrays(4));
}

TEST(Rename, SwapAndSingleRename) {
  auto p = testing::parse(testing::kBubble);
  auto s = transforms::swap_variables(p, "i", "j");
  ASSERT_TRUE(s.applicable);
  EXPECT_NE(body(s.program).find("a[i] > a[i + 1]"), std::string::npos);
  expect_same_behavior(p, s.program, testing::small_arrays(4));
  EXPECT_TRUE(transforms::rename_variable(p, "t", "tmp").applicable);
  EXPECT_FALSE(transforms::rename_variable(p, "t", "n").applicable);
}

TEST(Ncs, MergesNestedIfs) {
  auto p = testing::parse(kNested);
  auto r = transforms::simplify_nested_conditions(p);
  ASSERT_TRUE(r.applicable);
  EXPECT_NE(body(r.program).find("if (a > 0 && a < 10)"), std::string::npos);
  expect_same_behavior(p, r.program, scalar_suite());
}

TEST(Ncs, KeepsIfWithElse) {
  auto p = testing::parse(
      "int f(int a) { if (a > 0) { if (a < 10) { return 1; } } else { return 2; } return 0; }");
  EXPECT_FALSE(transforms::simplify_nested_conditions(p).applicable);
}

TEST(Cfr, ReplacesFlagWithBreak) {
  auto p = testing::parse(kFlag);
  auto r = transforms::remove_control_flags(p);
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(body(r.program).find("found"), std::string::npos);
  EXPECT_NE(body(r.program).find("break;"), std::string::npos);
  oracle::Suite suite = testing::small_arrays(3);
  suite.push_back({testing::ints({1, 3, 3})});
  suite.push_back({testing::ints({3})});
  expect_same_behavior(p, r.program, suite);
}

TEST(Csu, SwitchToIfChain) {
  auto p = testing::parse(kSwitch);
  auto r = transforms::unify_control_statements(p, transforms::CsuDirection::SwitchToIf);
  ASSERT_TRUE(r.applicable);
  EXPECT_NE(body(r.program).find("} else if (a == 2) {"), std::string::npos);
  expect_same_behavior(p, r.program, scalar_suite());
}

TEST(Csu, ForToWhile) {
  auto p = testing::parse(kLoop);
  auto r = transforms::unify_control_statements(p, transforms::CsuDirection::ForToWhile);
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(body(r.program).find("for"), std::string::npos);
  expect_same_behavior(p, r.program, testing::small_arrays(4));
}

TEST(Csu, ContinueRunsTheStepFirst) {
  auto p = testing::parse(
      "int f(int[] a) { int s = 0; for (int i = 0; i < Length(a); i += 1) { "
      "if (a[i] < 0) { continue; } s += a[i]; } return s; }");
  auto r = transforms::unify_control_statements(p, transforms::CsuDirection::ForToWhile);
  ASSERT_TRUE(r.applicable);
  EXPECT_NE(body(r.program).find("i += 1;\n                    continue;"), std::string::npos);
  expect_same_behavior(p, r.program, testing::small_arrays(4));
}

TEST(TypeApprox, WidensAndKeepsValuesInRange) {
  auto p = testing::parse(kArith);
  auto r = transforms::approximate_types(p, transforms::TypeMode::IntToLong);
  ASSERT_TRUE(r.applicable);
  EXPECT_NE(body(r.program).find("long f(long a)"), std::string::npos);
  for (const auto& in : scalar_suite())
    EXPECT_TRUE(interp::equal_modulo_width(interp::run(p, in), interp::run(r.program, in)));
}

TEST(TypeApprox, OverflowIsTheOnlyDivergence) {
  auto p = testing::parse("int f(int a) { int x = 2000000000; x += a; return x; }");
  auto r = transforms::approximate_types(p, transforms::TypeMode::IntToLong);
  ASSERT_TRUE(r.applicable);
  auto small = std::vector<Value>{Value::of_int(5)};
  auto big = std::vector<Value>{Value::of_int(2000000000)};
  EXPECT_TRUE(interp::equal_modulo_width(interp::run(p, small), interp::run(r.program, small)));
  auto narrow = interp::run(p, big);
  EXPECT_FALSE(interp::equal_modulo_width(narrow, interp::run(r.program, big)));
  EXPECT_EQ(narrow.width_events, 1u);
}

TEST(TypeApprox, SiteRestrictsToOneDeclaration) {
  auto p = testing::parse(kArith);
  auto r = transforms::approximate_types(p, transforms::TypeMode::IntToLong,
                                         p.entry().body[1].id);
  ASSERT_TRUE(r.applicable);
  ASSERT_EQ(r.edits.size(), 1u);
  EXPECT_NE(body(r.program).find("long unused = a * 2;"), std::string::npos);
  EXPECT_NE(body(r.program).find("int f(int a)"), std::string::npos);
  // Widening k alone would make `int s = a + k` narrow, so that site is rejected.
  EXPECT_FALSE(transforms::approximate_types(p, transforms::TypeMode::IntToLong,
                                             p.entry().body[0].id)
                   .applicable);
}

TEST(ApiApprox, SubstitutesEquivalentCalls) {
  auto p = testing::parse(kGuarded);
  auto r = transforms::substitute_api(p);
  ASSERT_TRUE(r.applicable);
  EXPECT_NE(body(r.program).find("Sort(a);"), std::string::npos);
  EXPECT_NE(body(r.program).find("return a[0];"), std::string::npos);
  expect_same_behavior(p, r.program, testing::small_arrays(3));
}

TEST(Strip, RemovesLeadingGuard) {
  auto p = testing::parse(kGuarded);
  ASSERT_EQ(transforms::leading_guards(p).size(), 1u);
  auto r = transforms::strip_error_handling(p);
  ASSERT_TRUE(r.applicable);
  EXPECT_TRUE(transforms::leading_guards(r.program).empty());
  auto empty = std::vector<Value>{testing::ints({})};
  EXPECT_FALSE(interp::run(p, empty) == interp::run(r.program, empty));
  EXPECT_FALSE(transforms::strip_error_handling(testing::parse(kLoop)).applicable);
}

TEST(Transforms, InapplicableReturnsInput) {
  auto p = testing::parse(kNested);
  for (auto k : {TransformKind::CVP, TransformKind::DCE, TransformKind::CFR,
                 TransformKind::API_APPROX}) {
    auto r = transforms::apply(k, p);
    EXPECT_FALSE(r.applicable) << transforms::to_string(k);
    EXPECT_TRUE(r.edits.empty());
    EXPECT_EQ(r.program, p);
  }
}

TEST(Transforms, UntouchedNodesKeepIds) {
  auto p = testing::parse(kArith);
  auto r = transforms::dce(p);
  const auto& before = p.entry().body;
  const auto& after = r.program.entry().body;
  ASSERT_EQ(after.size(), 3u);
  EXPECT_EQ(after[0].id, before[0].id);
  EXPECT_EQ(after[1].id, before[2].id);
  EXPECT_EQ(after[2].id, before[3].id);
}

TEST(Transforms, EditsCarrySourceSites) {
  auto p = testing::parse(testing::kBubble);
  auto r = transforms::hoist(p);
  ASSERT_FALSE(r.edits.empty());
  for (const auto& e : r.edits) {
    EXPECT_GT(e.site.line, 0u);
    EXPECT_LE(e.site.end(), p.source.size());
  }
}

// Every preserving transform keeps exact behavior on the reference sorts.
TEST(Transforms, PreservingOnReferenceSorts) {
  for (auto src : {testing::kBubble, testing::kInsertion, testing::kSelection,
                   testing::kMaxScan}) {
    auto p = testing::parse(src);
    oracle::Suite suite = testing::small_arrays(4);
    if (src == testing::kMaxScan) suite.erase(suite.begin());
    for (auto k : transforms::preserving_kinds()) {
      auto r = transforms::apply(k, p);
      if (r.applicable) expect_same_behavior(p, r.program, suite);
    }
  }
}

}  // namespace
}  // namespace coset
