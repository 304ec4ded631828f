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

#include "coset/interp/interpreter.hpp"
#include "coset/oracle/complexity.hpp"
#include "coset/oracle/differential.hpp"
#include "coset/oracle/properties.hpp"
#include "coset/transforms/transforms.hpp"
#include "fixtures.hpp"
#include "reference_sorts.hpp"
#include "scenarios.hpp"

namespace coset {
namespace {

using interp::Value;
using oracle::ComplexityClass;
using oracle::Mode;

using testing::brute_force;
using testing::Reference;
using testing::ref_bubble;
using testing::ref_insertion;
using testing::ref_selection;
using testing::SortHook;

TEST(PermutationSuite, CountsAllPermutations) {
  // 0! + 1! + ... + 6!
  EXPECT_EQ(oracle::permutation_suite(6).size(), 874u);
  EXPECT_EQ(oracle::permutation_suite(0).size(), 1u);
}

struct Case {
  std::string_view source;
  void (*reference)(std::vector<int>&, const SortHook&);
};

TEST(Properties, AgreeWithBruteForceReferences) {
  const auto suite = oracle::permutation_suite(6);
  for (Case c : {Case{testing::kBubble, ref_bubble}, Case{testing::kInsertion, ref_insertion},
                 Case{testing::kSelection, ref_selection}}) {
    auto p = testing::parse(c.source);
    Reference ref = brute_force(c.reference, 6);
    EXPECT_EQ(oracle::check_sorted_postcondition(p, suite), ref.sorted) << c.source;
    EXPECT_EQ(oracle::check_bubble_invariant(p, suite), std::optional<bool>(ref.suffix))
        << c.source;
    EXPECT_EQ(oracle::check_selection_invariant(p, suite), std::optional<bool>(ref.minima))
        << c.source;
  }
}

TEST(Properties, ExpectedShapeOfReferences) {
  auto b = brute_force(ref_bubble, 6);
  auto i = brute_force(ref_insertion, 6);
  auto s = brute_force(ref_selection, 6);
  EXPECT_TRUE(b.sorted && i.sorted && s.sorted);
  EXPECT_TRUE(b.suffix);
  EXPECT_FALSE(i.suffix);
  EXPECT_FALSE(s.suffix);
  EXPECT_TRUE(s.minima);
  EXPECT_FALSE(b.minima);
}

TEST(Properties, BrokenSortFailsP2WithWitness) {
  auto p = testing::parse(
      "int f(int[] a) { int n = Length(a); for (int i = 0; i < n - 1; i += 1) { "
      "for (int j = 0; j < n - i - 2; j += 1) { if (a[j] > a[j + 1]) { int t = a[j]; "
      "a[j] = a[j + 1]; a[j + 1] = t; } } } return 0; }");
  auto r = oracle::check_property(p, oracle::kSorted, oracle::permutation_suite(4));
  EXPECT_TRUE(r.applicable);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  auto out = interp::run(p, *r.witness);
  auto v = testing::as_ints(out.final_args[0]);
  EXPECT_FALSE(std::is_sorted(v.begin(), v.end()));
}

TEST(Properties, OddEvenSortsButFailsP3) {
  auto p = testing::parse(testing::kOddEvenSort);
  auto suite = oracle::permutation_suite(6);
  EXPECT_TRUE(oracle::check_sorted_postcondition(p, suite));
  auto r = oracle::check_property(p, oracle::kBubbleInvariant, suite);
  ASSERT_TRUE(r.applicable);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->size(), 1u);
}

TEST(Properties, NotApplicableWithoutLoopNest) {
  auto r = oracle::check_property(testing::parse(testing::kMaxScan), oracle::kBubbleInvariant,
                                  oracle::permutation_suite(3));
  EXPECT_FALSE(r.applicable);
}

TEST(Properties, SpecNamesRoundTrip) {
  for (auto s : {"P1=QUADRATIC", "P1=LINEAR", "P2", "P3", "P4", "returns-max", "returns-min",
                 "returns-range", "finds-key"}) {
    auto spec = oracle::parse_property(s);
    ASSERT_TRUE(spec) << s;
    EXPECT_EQ(oracle::to_string(*spec), s);
  }
  EXPECT_FALSE(oracle::parse_property("P9"));
}

TEST(Properties, ReturnsMax) {
  auto suite = testing::small_arrays(3);
  suite.erase(suite.begin());
  auto r = oracle::check_property(testing::parse(testing::kMaxScan),
                                  {oracle::PropertyId::ReturnsMax}, suite);
  EXPECT_TRUE(r.holds);
  auto m = oracle::check_property(testing::parse(testing::kMaxScan),
                                  {oracle::PropertyId::ReturnsMin}, suite);
  EXPECT_FALSE(m.holds);
}

TEST(Complexity, SlopeBins) {
  oracle::SlopeBins bins;
  EXPECT_EQ(bins.classify(1.0), ComplexityClass::Linear);
  EXPECT_EQ(bins.classify(1.25), ComplexityClass::Linearithmic);
  EXPECT_EQ(bins.classify(1.7), ComplexityClass::Quadratic);
  EXPECT_EQ(bins.classify(2.3), ComplexityClass::Quadratic);
  EXPECT_EQ(bins.classify(2.31), ComplexityClass::Other);
  EXPECT_EQ(bins.classify(0.5), ComplexityClass::Other);
}

TEST(Complexity, BubbleQuadraticScanLinear) {
  auto bubble = oracle::estimate_complexity(testing::parse(testing::kBubble));
  auto scan = oracle::estimate_complexity(testing::parse(testing::kMaxScan));
  EXPECT_EQ(bubble.cls, ComplexityClass::Quadratic);
  EXPECT_EQ(scan.cls, ComplexityClass::Linear);
  ASSERT_EQ(bubble.sizes, (std::vector<std::size_t>{8, 16, 32, 64, 128}));
  double ratio = bubble.mean_steps[3] / bubble.mean_steps[2];
  EXPECT_GE(ratio, 3.5);
  EXPECT_LE(ratio, 4.5);
  auto again = oracle::estimate_complexity(testing::parse(testing::kBubble));
  EXPECT_EQ(again.mean_steps, bubble.mean_steps);
}

TEST(Complexity, TimeoutGivesOther) {
  oracle::ComplexityOptions opts;
  opts.run.step_limit = 500;
  auto est = oracle::estimate_complexity(testing::parse(testing::kBubble), opts);
  EXPECT_TRUE(est.timed_out);
  EXPECT_EQ(est.cls, ComplexityClass::Other);
}

TEST(Differential, ExactPassAndWitness) {
  auto p = testing::parse(testing::kBubble);
  auto q = transforms::hoist(p).program;
  auto v = oracle::differential_check(p, q, testing::small_arrays(3), Mode::Exact);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.divergences(), 0u);
  EXPECT_FALSE(v.witness);

  auto broken = testing::parse(testing::kSelection);
  auto w = oracle::differential_check(p, broken, {{testing::ints({2, 1})}}, Mode::Exact);
  EXPECT_TRUE(w.pass);
  auto bad = testing::parse("int f(int[] a) { return 0; }");
  auto x = oracle::differential_check(p, bad, testing::small_arrays(2), Mode::Exact);
  EXPECT_FALSE(x.pass);
  ASSERT_TRUE(x.witness);
  EXPECT_FALSE(x.results[*x.witness].equal);
}

TEST(Differential, ApproximatingFlagsOverflow) {
  auto p = testing::parse("int f(int a) { int x = 2000000000; x += a; return x; }");
  auto q = transforms::approximate_types(p, transforms::TypeMode::IntToLong).program;
  oracle::Suite suite{{Value::of_int(1)}, {Value::of_int(2000000000)}};
  auto v = oracle::differential_check(p, q, suite, Mode::Approximating);
  EXPECT_EQ(v.divergences(), 1u);
  EXPECT_EQ(v.flagged(), 1u);
  EXPECT_TRUE(v.results[1].flagged);
  EXPECT_TRUE(v.pass);
}

TEST(Differential, ExpectDivergenceNeedsGuardInput) {
  auto p = testing::parse(
      "int f(int[] a) { if (Length(a) == 0) { return -1; } return a[0]; }");
  auto q = transforms::strip_error_handling(p).program;
  auto v = oracle::differential_check(p, q, {{testing::ints({})}, {testing::ints({4})}},
                                      Mode::ExpectDivergence);
  EXPECT_TRUE(v.pass);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, 0u);
  EXPECT_TRUE(v.results[0].guard);
  auto none = oracle::differential_check(p, q, {{testing::ints({4})}}, Mode::ExpectDivergence);
  EXPECT_FALSE(none.pass);
}

TEST(Differential, RejectsEmptySuiteAndArityMismatch) {
  auto p = testing::parse(testing::kBubble);
  EXPECT_THROW(oracle::differential_check(p, p, {}, Mode::Exact), std::invalid_argument);
  auto two = testing::parse("int f(int[] a, int b) { return b; }");
  EXPECT_THROW(oracle::differential_check(p, two, {{testing::ints({1})}}, Mode::Exact),
               std::invalid_argument);
}

// A verdict is a function of its per-input results.
TEST(Differential, DecideIsPure) {
  auto p = testing::parse(testing::kBubble);
  auto bad = testing::parse("int f(int[] a) { return 0; }");
  auto v = oracle::differential_check(p, bad, testing::small_arrays(2), Mode::Exact);
  auto copy = v;
  copy.pass = !copy.pass;
  copy.witness.reset();
  oracle::decide(copy);
  EXPECT_EQ(copy.pass, v.pass);
  EXPECT_EQ(copy.witness, v.witness);
}

}  // namespace
}  // namespace coset
