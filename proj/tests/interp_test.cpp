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

#include <algorithm>

#include "coset/interp/trace.hpp"
#include "coset/lang/printer.hpp"
#include "coset/transforms/transforms.hpp"
#include "fixtures.hpp"

namespace coset {
namespace {

using interp::FaultKind;
using interp::Value;
using testing::ints;

interp::Outcome run1(std::string_view src, std::vector<Value> args) {
  return interp::run(testing::parse(src), args);
}

TEST(Interpreter, SortsInPlace) {
  for (auto src : {testing::kBubble, testing::kInsertion, testing::kSelection}) {
    auto o = run1(src, {ints({4, -1, 3, 3, 0})});
    ASSERT_FALSE(o.fault) << interp::describe(o);
    EXPECT_EQ(testing::as_ints(o.final_args[0]), (std::vector<int>{-1, 0, 3, 3, 4}));
    EXPECT_EQ(o.returned->i, 0);
  }
}

TEST(Interpreter, CountsStatementsAndLoopTests) {
  // decl, while, 4 condition tests, 3 assignments, return
  auto o = run1("int f(int a) { int s = 0; while (s < 3) { s += 1; } return s; }",
                {Value::of_int(5)});
  EXPECT_EQ(o.steps, 10u);
  EXPECT_EQ(o.returned->i, 3);
}

TEST(Interpreter, Faults) {
  EXPECT_EQ(run1(testing::kMaxScan, {ints({})}).fault->kind, FaultKind::IndexOutOfBounds);
  EXPECT_EQ(run1("int f(int a) { return 10 / a; }", {Value::of_int(0)}).fault->kind,
            FaultKind::DivByZero);
  auto spin = testing::parse("int f(int a) { while (true) { a += 1; } return a; }");
  interp::RunOptions opts;
  opts.step_limit = 1000;
  auto o = interp::run(spin, std::vector<Value>{Value::of_int(0)}, opts);
  ASSERT_TRUE(o.fault);
  EXPECT_EQ(o.fault->kind, FaultKind::Timeout);
  EXPECT_EQ(run1("int f(int a) { return g(a); } int g(int a) { return g(a); }",
                 {Value::of_int(1)})
                .fault->kind,
            FaultKind::StackOverflow);
}

TEST(Interpreter, MinMaxOfEmptyArrayFault) {
  EXPECT_EQ(run1("int f(int[] a) { return Max(a); }", {ints({})}).fault->kind,
            FaultKind::IndexOutOfBounds);
  EXPECT_EQ(run1("int f(int[] a) { return Min(a); }", {ints({3, -2})}).returned->i, -2);
}

TEST(Interpreter, BuiltinSortHonoursComparer) {
  auto o = run1("int f(int[] a) { Sort(a, DESC); return a[0]; }", {ints({1, 5, 2})});
  EXPECT_EQ(testing::as_ints(o.final_args[0]), (std::vector<int>{5, 2, 1}));
  EXPECT_EQ(o.returned->i, 5);
}

TEST(Outcome, EqualityIgnoresStepCounts) {
  auto a = run1("int f(int a) { return a + 1; }", {Value::of_int(1)});
  auto b = run1("int f(int a) { int b = a; b += 1; return b; }", {Value::of_int(1)});
  EXPECT_NE(a.steps, b.steps);
  EXPECT_EQ(a, b);
}

TEST(Outcome, IntArithmeticWrapsAndIsCounted) {
  auto o = run1("int f(int a) { int x = 2147483647; x += a; return x; }", {Value::of_int(5)});
  EXPECT_EQ(o.returned->i, -2147483644);
  EXPECT_EQ(o.width_events, 1u);
  auto wide = run1("int f(int a) { long x = 2147483647; x += a; return 0; }", {Value::of_int(5)});
  EXPECT_EQ(wide.width_events, 0u);
}

TEST(Outcome, EqualModuloWidth) {
  auto narrow = run1("int f(int a) { return a * 2; }", {Value::of_int(4)});
  auto wide = run1("long f(int a) { long b = a; return b * 2; }", {Value::of_int(4)});
  EXPECT_FALSE(narrow == wide);
  EXPECT_TRUE(interp::equal_modulo_width(narrow, wide));
}

TEST(Trace, RecordsStateChangesBySlot) {
  auto t = interp::trace(testing::parse("int f(int a) { int s = 0; while (s < 3) { s += 1; } "
                                        "return s; }"),
                         std::vector<Value>{Value::of_int(5)});
  EXPECT_EQ(interp::serialize(t.trace),
            "# coset-trace v1 steps=10\n0,1,0\n1,1,1\n2,1,2\n3,1,3\n");
}

TEST(Trace, DataProjectionDropsBoolsAndRenumbers) {
  auto p = testing::parse(
      "int f(int a) { bool d = false; int s = 0; for (int i = 0; i < 2; i += 1) { s += a; "
      "d = true; } Print(s); return s; }");
  auto t = interp::trace(p, std::vector<Value>{Value::of_int(5)}).trace;
  EXPECT_EQ(t.snapshots.size(), 9u);
  auto d = t.data_projection();
  EXPECT_EQ(interp::serialize(d),
            "# coset-trace v1 steps=0\n0,0,0\n1,1,0\n2,0,5\n3,1,1\n4,0,10\n5,1,2\n");
}

TEST(Trace, AlphaRenamingKeepsTraces) {
  auto p = testing::parse(testing::kBubble);
  auto q = transforms::rename_variables(p, 3).program;
  ASSERT_NE(lang::print(p), lang::print(q));
  for (const auto& in : testing::small_arrays(4)) {
    auto a = interp::trace(p, in);
    auto b = interp::trace(q, in);
    ASSERT_EQ(a.trace, b.trace);
  }
}

TEST(Trace, NormalizedSizes) {
  auto p = testing::parse(testing::kBubble);
  EXPECT_EQ(interp::normalized_size(p), 13u * 15u);
  auto t = interp::trace(p, std::vector<Value>{ints({2, 1})}).trace;
  EXPECT_EQ(interp::normalized_size(t), t.snapshots.size() * 20u);
}

// Element writes record the whole array, so replaying the snapshots gives
// the final argument array whenever the array was written.
TEST(Trace, FinalStateMatchesOutcome) {
  auto p = testing::parse(testing::kInsertion);
  std::size_t written = 0;
  for (const auto& in : testing::small_arrays(4)) {
    auto r = interp::trace(p, in);
    auto state = r.trace.final_state();
    if (!state.count(0)) continue;
    ++written;
    EXPECT_EQ(state.at(0), r.outcome.final_args[0]);
  }
  EXPECT_GT(written, 100u);
}

}  // namespace
}  // namespace coset
