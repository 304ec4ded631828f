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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "coset/corpus/generator.hpp"
#include "coset/corpus/manifest.hpp"
#include "coset/debugger/decompose.hpp"
#include "coset/debugger/minimize.hpp"
#include "coset/harness/baselines.hpp"
#include "coset/harness/evaluation.hpp"
#include "coset/harness/external.hpp"
#include "coset/lang/parser.hpp"
#include "coset/lang/printer.hpp"
#include "coset/oracle/complexity.hpp"
#include "coset/oracle/properties.hpp"
#include "coset/transforms/transforms.hpp"
#include "fixtures.hpp"
#include "reference_sorts.hpp"
#include "scenarios.hpp"

namespace {

using namespace coset;
using transforms::TransformKind;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kCorpusSeed = 7;
constexpr std::size_t kPerLabel = 48;
constexpr std::uint64_t kSplitSeed = 3;
constexpr double kTimeBudgetSeconds = 300.0;
constexpr double kRatioLo = 3.5;
constexpr double kRatioHi = 4.5;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + why;
    }
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

oracle::Mode mode_of(TransformKind k) {
  switch (transforms::contract_of(k)) {
    case transforms::Contract::Preserving: return oracle::Mode::Exact;
    case transforms::Contract::Approximating: return oracle::Mode::Approximating;
    case transforms::Contract::Changing: return oracle::Mode::ExpectDivergence;
  }
  return oracle::Mode::Exact;
}

struct Corpus {
  corpus::Manifest manifest;
  std::vector<lang::Program> programs;
  double seconds = 0;
};

Verdict preserving(const Corpus& c) {
  Verdict v;
  auto start = Clock::now();
  std::string counts;
  for (auto k : transforms::preserving_kinds()) {
    std::size_t applicable = 0, divergent = 0;
    for (std::size_t i = 0; i < c.programs.size(); ++i) {
      auto r = transforms::apply(k, c.programs[i]);
      if (!r.applicable) continue;
      ++applicable;
      auto check = oracle::differential_check(c.programs[i], r.program,
                                              c.manifest.entries[i].inputs, oracle::Mode::Exact);
      divergent += check.divergences();
    }
    counts += std::string(" ") + transforms::to_string(k) + "=" + std::to_string(applicable);
    v.require(divergent == 0, std::string(transforms::to_string(k)) + " diverged on " +
                                  std::to_string(divergent) + " inputs");
    v.require(applicable > 0, std::string(transforms::to_string(k)) + " never applied");
  }
  double secs = seconds_since(start) + c.seconds;
  v.require(c.programs.size() >= 400, "corpus has fewer than 400 programs");
  v.require(secs < kTimeBudgetSeconds, "over the time budget");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu programs, %.1f s, applicable:", c.programs.size(), secs);
  v.detail = v.pass ? buf + counts : v.detail;
  return v;
}

Verdict approximating(const Corpus& c) {
  Verdict v;
  std::size_t api = 0, type = 0, strip = 0, witnesses = 0;
  for (std::size_t i = 0; i < c.programs.size(); ++i) {
    const auto& p = c.programs[i];
    const auto& e = c.manifest.entries[i];
    auto a = transforms::apply(TransformKind::API_APPROX, p);
    if (a.applicable) {
      ++api;
      auto r = oracle::differential_check(p, a.program, e.inputs, mode_of(TransformKind::API_APPROX));
      v.require(r.divergences() == 0, "API_APPROX diverged on " + e.id);
    }
    auto t = transforms::apply(TransformKind::TYPE_APPROX, p);
    if (t.applicable) {
      ++type;
      auto r = oracle::differential_check(p, t.program, e.inputs, oracle::Mode::Approximating);
      v.require(r.divergences() == 0, "TYPE_APPROX diverged on ordinary input of " + e.id);
      if (e.label == "DifferenceByScan") {
        oracle::Suite overflow{{testing::ints({2000000000, -2000000000})}};
        auto w = oracle::differential_check(p, t.program, overflow, oracle::Mode::Approximating);
        v.require(w.divergences() == 1 && w.flagged() == 1,
                  "overflow witness not flagged for " + e.id);
        ++witnesses;
      }
    }
    auto s = transforms::apply(TransformKind::STRIP_ERROR_HANDLING, p);
    if (s.applicable) {
      ++strip;
      auto r = oracle::differential_check(p, s.program, e.inputs, oracle::Mode::ExpectDivergence);
      v.require(r.pass && r.divergences() >= 1, "STRIP kept behavior of " + e.id);
    }
  }
  // Precision witness for the floating direction.
  auto fp = testing::parse("double f(double a) { double x = 0.1; x += a; return x; }");
  auto narrowed = transforms::approximate_types(fp, transforms::TypeMode::DoubleToFloat);
  auto pw = oracle::differential_check(fp, narrowed.program,
                                       {{interp::Value::of_double(0.2)}},
                                       oracle::Mode::Approximating);
  v.require(narrowed.applicable && pw.divergences() == 1 && pw.flagged() == 1,
            "precision witness not flagged");
  v.require(api > 0 && type > 0 && strip > 0 && witnesses > 0, "a contract never applied");
  if (v.pass)
    v.detail = "API_APPROX " + std::to_string(api) + " programs, TYPE_APPROX " +
               std::to_string(type) + " programs with " + std::to_string(witnesses + 1) +
               " flagged witnesses, STRIP diverged on " + std::to_string(strip) + "/" +
               std::to_string(strip);
  return v;
}

Verdict round_trip(const Corpus& c) {
  Verdict v;
  for (std::size_t i = 0; i < c.programs.size(); ++i) {
    const auto& e = c.manifest.entries[i];
    auto printed = lang::print(c.programs[i]);
    auto reparsed = lang::parse_checked(printed);
    v.require(reparsed == c.programs[i] && lang::print(reparsed) == printed,
              "round trip failed for " + e.id);
    auto once = transforms::dce(c.programs[i]).program;
    auto twice = transforms::dce(once);
    v.require(!twice.applicable && twice.program == once, "dce not idempotent on " + e.id);
  }
  if (v.pass) v.detail = std::to_string(c.programs.size()) + " programs";
  return v;
}

// Flips under VR for the first 42 of 1000 entries.
class FixtureClassifier : public harness::Classifier {
 public:
  std::string name() const override { return "fixture"; }
  harness::Prediction classify(const corpus::CorpusEntry& e) override {
    bool renamed = e.source.find("v1") != std::string::npos;
    return harness::Prediction::of(renamed && std::stoi(e.id.substr(1)) < 42 ? "B" : "A");
  }
  std::unique_ptr<Classifier> clone() const override {
    return std::make_unique<FixtureClassifier>();
  }
};

Verdict metric_fixtures() {
  Verdict v;
  std::vector<corpus::CorpusEntry> entries(1000);
  harness::Entries ptrs;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    entries[k].id = "e" + std::to_string(k);
    entries[k].task = "aggregate";
    entries[k].label = "A";
    entries[k].source = "int f(int a) {\n    return a + 1;\n}\n";
    entries[k].inputs = {{interp::Value::of_int(static_cast<int>(k))}};
    ptrs.push_back(&entries[k]);
  }
  FixtureClassifier c;
  std::vector<TransformKind> vr{TransformKind::VR};
  auto table = harness::stability(c, ptrs, vr);
  v.require(table.rows.size() == 1 && table.rows[0].applicable == 1000 &&
                table.rows[0].flipped == 42,
            "fixture row is not 42/1000");
  std::string cell = table.rows.empty() ? "" : harness::percent(table.rows[0].rate());
  v.require(cell == "4.2%", "flip rate printed as " + cell);

  using harness::Prediction;
  auto r = harness::score({"A", "A", "B", "B"}, {Prediction::of("A"), Prediction::of("B"),
                                                 Prediction::of("A"), Prediction::of("B")});
  v.require(r.macro_f1 == 0.5, "macro-F1 is " + std::to_string(r.macro_f1));
  if (v.pass) v.detail = "flip rate " + cell + ", macro-F1 0.5";
  return v;
}

Verdict table_one(const Corpus& c) {
  Verdict v;
  auto train = c.manifest.select(corpus::Split::Train);
  auto test = c.manifest.select(corpus::Split::Test);
  auto bag = harness::train_baseline(harness::BaselineKind::StaticBag, train);
  auto dyn = harness::train_baseline(harness::BaselineKind::DynamicTrace, train);
  std::vector<TransformKind> vr{TransformKind::VR};
  auto bag_table = harness::stability(*bag, test, vr);
  double bag_rate = bag_table.rows.empty() ? 0.0 : bag_table.rows[0].rate();
  v.require(bag_rate > 0.0, "static-bag never flips under VR");

  std::vector<TransformKind> kinds{TransformKind::VR, TransformKind::NCS, TransformKind::CFR,
                                   TransformKind::CSU};
  auto dyn_table = harness::stability(*dyn, test, kinds);
  v.require(dyn_table.aborted.empty(), "a transform broke its contract");
  v.require(dyn_table.rows.size() == kinds.size(), "a kind had no applicable entry");
  for (const auto& row : dyn_table.rows)
    v.require(harness::percent(row.rate()) == "0.0%",
              "dynamic-trace flips under " + row.kind);
  std::size_t checked = 0;
  for (auto k : kinds)
    for (const auto* e : test) {
      auto p = e->program();
      auto r = transforms::apply(k, p);
      if (!r.applicable) continue;
      ++checked;
      v.require(harness::data_traces_equal(p, r.program, e->inputs),
                std::string("trace mismatch under ") + transforms::to_string(k) + " on " + e->id);
    }
  if (v.pass)
    v.detail = "static-bag VR " + harness::percent(bag_rate) +
               ", dynamic-trace 0.0% on 4 kinds, " + std::to_string(checked) +
               " trace-equal pairs over " + std::to_string(test.size()) + " test entries";
  return v;
}

Verdict property_oracles() {
  Verdict v;
  const auto suite = oracle::permutation_suite(6);
  struct Case {
    const char* name;
    std::string_view source;
    void (*reference)(std::vector<int>&, const testing::SortHook&);
  };
  for (Case c : {Case{"bubble", testing::kBubble, testing::ref_bubble},
                 Case{"insertion", testing::kInsertion, testing::ref_insertion},
                 Case{"selection", testing::kSelection, testing::ref_selection}}) {
    auto p = testing::parse(c.source);
    auto ref = testing::brute_force(c.reference, 6);
    v.require(oracle::check_sorted_postcondition(p, suite) == ref.sorted,
              std::string("P2 disagrees on ") + c.name);
    v.require(oracle::check_bubble_invariant(p, suite) == std::optional<bool>(ref.suffix),
              std::string("P3 disagrees on ") + c.name);
  }
  auto odd = testing::parse(testing::kOddEvenSort);
  auto r = oracle::check_property(odd, oracle::kBubbleInvariant, suite);
  v.require(r.applicable && !r.holds && r.witness.has_value(), "odd-even variant passes P3");
  if (v.pass) {
    v.detail = std::to_string(suite.size()) + " permutations; odd-even witness [";
    for (std::size_t k = 0; k < (*r.witness)[0].a->size(); ++k)
      v.detail += (k ? "," : "") + std::to_string((*(*r.witness)[0].a)[k].i);
    v.detail += "]";
  }
  return v;
}

Verdict complexity() {
  Verdict v;
  auto bubble = testing::parse(testing::kBubble);
  auto scan = testing::parse(testing::kMaxScan);
  oracle::ComplexityOptions opts;
  opts.sizes = {8, 16, 32, 64, 128};
  auto b = oracle::estimate_complexity(bubble, opts);
  auto s = oracle::estimate_complexity(scan, opts);
  auto again = oracle::estimate_complexity(bubble, opts);
  v.require(b.cls == oracle::ComplexityClass::Quadratic, "bubble is not QUADRATIC");
  v.require(s.cls == oracle::ComplexityClass::Linear, "scan is not LINEAR");
  v.require(again.mean_steps == b.mean_steps && again.slope == b.slope, "not deterministic");
  double ratio = b.mean_steps[3] / b.mean_steps[2];
  v.require(ratio >= kRatioLo && ratio <= kRatioHi, "n64/n32 ratio " + std::to_string(ratio));
  char buf[160];
  std::snprintf(buf, sizeof buf, "bubble slope %.3f, scan slope %.3f, n64/n32 %.0f/%.0f = %.3f",
                b.slope, s.slope, b.mean_steps[3], b.mean_steps[2], ratio);
  if (v.pass) v.detail = buf;
  return v;
}

Verdict debugger_recovery() {
  Verdict v;
  std::string names;
  for (const auto& s : testing::flip_scenarios()) {
    std::vector<const corpus::CorpusEntry*> train;
    for (const auto& e : s.train) train.push_back(&e);
    auto c = harness::train_baseline(harness::BaselineKind::StaticBag, train);
    debugger::MinimizeOptions opts;
    opts.guard_probe = s.guard_probe;
    auto r = debugger::minimize_flip(*c, s.entry, s.target, opts);
    std::vector<std::string> got;
    for (const auto& e : r.edits) got.push_back(e.describe());
    auto want = s.planted;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    v.require(r.flipped && got == want, "scenario " + s.name + " missed the planted edit");
    names += (names.empty() ? "" : ",") + s.name;
  }
  auto m = testing::decomposition_corpus();
  auto d = debugger::property_decomposition(
      harness::BaselineKind::StaticBag, m, "oddeven-001",
      {oracle::complexity_is(oracle::ComplexityClass::Quadratic), oracle::kSorted,
       oracle::kBubbleInvariant});
  v.require(d.failing == std::vector<std::string>{"P3"}, "decomposition did not isolate P3");
  if (v.pass) v.detail = "scenarios " + names + " recovered; decomposition fails P3 only";
  return v;
}

Verdict protocol(const Corpus& c) {
  Verdict v;
  auto test = c.manifest.select(corpus::Split::Test);
  harness::ExternalOptions opts;
  opts.deadline = std::chrono::milliseconds(300);
  for (const auto& l : corpus::labels()) opts.labels.insert(l.label);
  struct Fault {
    const char* name;
    const char* args;
    bool restarts;
  };
  std::string summary;
  for (Fault f : {Fault{"malformed", "--malformed-every 5 --unknown-every 7", false},
                  Fault{"deadline", "--sleep-on 3 --sleep-ms 2000", true},
                  Fault{"exit", "--exit-after 10", true}}) {
    harness::ExternalClassifier ext(std::string(COSET_STUB) + " " + f.args, opts);
    auto report = harness::evaluate(ext, test);
    const std::string name = f.name;
    v.require(report.total == test.size(), name + ": run did not complete");
    v.require(report.errors > 0, name + ": no error predictions recorded");
    v.require(report.errors < report.total, name + ": no successful prediction");
    v.require(f.restarts ? ext.launches() > 1 : ext.launches() == 1,
              name + ": unexpected process launches");
    v.require(!ext.dead(), name + ": process abandoned");
    summary += (summary.empty() ? "" : ", ") + name + " " + std::to_string(report.errors) + "/" +
               std::to_string(report.total) + " errors";
  }
  if (v.pass) v.detail = summary;
  return v;
}

}  // namespace

int main() {
  Corpus c;
  auto start = Clock::now();
  c.manifest = corpus::split(corpus::generate_task("", kPerLabel, kCorpusSeed),
                             {0.76, 0.12, 0.12}, kSplitSeed);
  for (const auto& e : c.manifest.entries) c.programs.push_back(e.program());
  c.seconds = seconds_since(start);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"preserving transforms keep exact behavior", [&] { return preserving(c); }},
      {"approximating and changing contracts", [&] { return approximating(c); }},
      {"round trip and dce idempotence", [&] { return round_trip(c); }},
      {"metric fixtures", [] { return metric_fixtures(); }},
      {"baseline stability", [&] { return table_one(c); }},
      {"property checkers match brute force", [] { return property_oracles(); }},
      {"complexity estimator", [] { return complexity(); }},
      {"debugger recovers planted causes", [] { return debugger_recovery(); }},
      {"external protocol robustness", [&] { return protocol(c); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %zu %s: %s\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
