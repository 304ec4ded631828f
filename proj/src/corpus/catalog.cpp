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

#include "coset/corpus/catalog.hpp"

#include <algorithm>
#include <random>

#include "coset/lang/parser.hpp"

namespace coset::corpus {

using interp::Value;
using oracle::ComplexityClass;
using oracle::PropertyId;
using oracle::PropertySpec;

namespace {

Value int_array(const std::vector<int>& xs) {
  interp::Array a;
  for (int x : xs) a.push_back(Value::of_int(x));
  return Value::of_array(lang::Scalar::Int, std::move(a));
}

oracle::Input sorted_search_input(const lang::Function&, std::size_t n,
                                  std::mt19937_64& rng) {
  std::vector<int> xs(n);
  int v = static_cast<int>(rng() % 5);
  for (auto& x : xs) {
    x = v;
    v += 2 + static_cast<int>(rng() % 3);
  }
  // Absent keys drive both searches to their longest path.
  return {int_array(xs), Value::of_int(-1)};
}

const std::vector<std::vector<int>> kArrayEdges{
    {}, {7}, {1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}, {3, 1, 3, 2, 1, 2}, {-4, 0, -4, 9},
};

std::vector<int> random_array(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  std::size_t n = lo + rng() % (hi - lo + 1);
  std::vector<int> xs(n);
  for (auto& x : xs) x = static_cast<int>(rng() % 41) - 20;
  return xs;
}

PropertySpec spec(PropertyId id) { return PropertySpec{id}; }

}  // namespace

const char* to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Valid: return "valid";
    case Split::Test: return "test";
  }
  return "?";
}

std::optional<Split> parse_split(std::string_view s) {
  for (auto v : {Split::Train, Split::Valid, Split::Test})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

lang::Program CorpusEntry::program() const { return lang::parse_checked(source); }

std::string to_string(const LabelCheck& c) {
  return (c.expected ? "" : "!") + oracle::to_string(c.spec);
}

const std::vector<TaskDef>& tasks() {
  static const std::vector<TaskDef> kTasks{
      {"sorting",
       {oracle::complexity_is(ComplexityClass::Quadratic), oracle::kSorted,
        oracle::kBubbleInvariant, oracle::kSelectionInvariant},
       oracle::random_array_input, -1},
      {"difference",
       {oracle::complexity_is(ComplexityClass::Quadratic), spec(PropertyId::ReturnsRange)},
       oracle::random_array_input, -1},
      {"search",
       {oracle::complexity_is(ComplexityClass::Linear), spec(PropertyId::FindsKey)},
       sorted_search_input, -2},
      {"aggregate",
       {oracle::complexity_is(ComplexityClass::Linear), spec(PropertyId::ReturnsMax),
        spec(PropertyId::ReturnsMin)},
       oracle::random_array_input, -1},
  };
  return kTasks;
}

const std::vector<LabelDef>& labels() {
  const auto quadratic = oracle::complexity_is(ComplexityClass::Quadratic);
  const auto linear = oracle::complexity_is(ComplexityClass::Linear);
  static const std::vector<LabelDef> kLabels{
      {"Bubblesort", "sorting",
       {{quadratic, true}, {oracle::kSorted, true}, {oracle::kBubbleInvariant, true}}},
      {"Insertionsort", "sorting",
       {{quadratic, true}, {oracle::kSorted, true}, {oracle::kBubbleInvariant, false},
        {oracle::kSelectionInvariant, false}}},
      {"Selectionsort", "sorting",
       {{quadratic, true}, {oracle::kSorted, true}, {oracle::kBubbleInvariant, false},
        {oracle::kSelectionInvariant, true}}},
      {"DifferenceBySort", "difference",
       {{quadratic, true}, {spec(PropertyId::ReturnsRange), true}}},
      {"DifferenceByScan", "difference",
       {{linear, true}, {spec(PropertyId::ReturnsRange), true}}},
      {"LinearSearch", "search",
       {{spec(PropertyId::FindsKey), true}, {linear, true}}},
      {"BinarySearch", "search",
       {{spec(PropertyId::FindsKey), true},
        {oracle::complexity_is(ComplexityClass::Other), true}}},
      {"MaxScan", "aggregate",
       {{spec(PropertyId::ReturnsMax), true}, {linear, true}}},
      {"MinScan", "aggregate",
       {{spec(PropertyId::ReturnsMin), true}, {linear, true}}},
  };
  return kLabels;
}

const TaskDef* find_task(std::string_view id) {
  for (const auto& t : tasks())
    if (t.id == id) return &t;
  return nullptr;
}

const LabelDef* find_label(std::string_view label) {
  for (const auto& l : labels())
    if (l.label == label) return &l;
  return nullptr;
}

std::vector<const LabelDef*> labels_of(std::string_view task) {
  std::vector<const LabelDef*> out;
  for (const auto& l : labels())
    if (l.task == task) out.push_back(&l);
  return out;
}

bool applies(const TaskDef& task, const PropertySpec& s) {
  return std::any_of(task.properties.begin(), task.properties.end(),
                     [&](const PropertySpec& p) { return p.id == s.id; });
}

oracle::Suite input_suite(const TaskDef& task, std::uint64_t seed,
                          std::size_t random) {
  std::mt19937_64 rng(seed);
  oracle::Suite out;
  if (task.id == "search") {
    const std::vector<std::pair<std::vector<int>, int>> edges{
        {{}, 3}, {{4}, 4}, {{4}, 5}, {{1, 3, 5, 7, 9}, 7}, {{1, 3, 5, 7, 9}, 1},
        {{1, 3, 5, 7, 9}, 9}, {{1, 3, 5, 7, 9}, 4}, {{2, 2, 2, 5}, 2},
        {{2, 2, 2, 5}, 5}, {{-5, -1, 0, 8}, -5},
    };
    for (const auto& [xs, k] : edges) out.push_back({int_array(xs), Value::of_int(k)});
    for (std::size_t r = 0; r < random; ++r) {
      auto xs = random_array(rng, 1, 9);
      std::sort(xs.begin(), xs.end());
      int key = rng() % 2 ? xs[rng() % xs.size()] : static_cast<int>(rng() % 41) - 20;
      out.push_back({int_array(xs), Value::of_int(key)});
    }
    return out;
  }
  for (const auto& xs : kArrayEdges) out.push_back({int_array(xs)});
  for (std::size_t r = 0; r < random; ++r) out.push_back({int_array(random_array(rng, 2, 9))});
  return out;
}

oracle::Suite certification_suite(const TaskDef& task, const oracle::Suite& base) {
  oracle::Suite out = base;
  if (task.id == "search") {
    const std::vector<std::vector<int>> arrays{
        {1}, {1, 2}, {1, 3, 5}, {2, 4, 6, 8}, {-3, 0, 0, 4, 7}, {1, 2, 3, 4, 5, 6, 7}};
    for (const auto& xs : arrays)
      for (int k = xs.front() - 1; k <= xs.back() + 1; ++k)
        out.push_back({int_array(xs), Value::of_int(k)});
    return out;
  }
  auto perms = oracle::permutation_suite(5);
  out.insert(out.end(), perms.begin(), perms.end());
  return out;
}

oracle::PropertyOptions property_options(const TaskDef& task) {
  oracle::PropertyOptions o;
  o.complexity.make_input = task.make_input;
  return o;
}

LabelVerdict check_label(const LabelDef& def, const lang::Program& p,
                         const oracle::Suite& suite,
                         const oracle::PropertyOptions& options) {
  LabelVerdict v;
  v.ok = true;
  for (const auto& c : def.checks) {
    CheckOutcome o{c, oracle::check_property(p, c.spec, suite, options), false};
    o.ok = o.result.applicable && o.result.holds == c.expected;
    v.ok = v.ok && o.ok;
    v.checks.push_back(std::move(o));
  }
  return v;
}

std::optional<std::string> derive_label(const TaskDef& task, const lang::Program& p,
                                        const oracle::Suite& suite) {
  for (const auto* def : labels_of(task.id))
    if (check_label(*def, p, suite, property_options(task)).ok) return def->label;
  return std::nullopt;
}

}  // namespace coset::corpus
