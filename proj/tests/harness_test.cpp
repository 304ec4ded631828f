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

#include "coset/corpus/generator.hpp"
#include "coset/corpus/manifest.hpp"
#include "coset/harness/baselines.hpp"
#include "coset/harness/evaluation.hpp"
#include "coset/harness/external.hpp"
#include "coset/harness/metrics.hpp"
#include "fixtures.hpp"

namespace coset {
namespace {

using harness::Prediction;
using transforms::TransformKind;

class FixedClassifier : public harness::Classifier {
 public:
  explicit FixedClassifier(std::string label) : label_(std::move(label)) {}
  std::string name() const override { return "fixed"; }
  Prediction classify(const corpus::CorpusEntry&) override { return Prediction::of(label_); }
  std::unique_ptr<Classifier> clone() const override {
    return std::make_unique<FixedClassifier>(label_);
  }

 private:
  std::string label_;
};

// Predicts from the presence of a substring in the source.
class KeywordClassifier : public harness::Classifier {
 public:
  std::string name() const override { return "keyword"; }
  Prediction classify(const corpus::CorpusEntry& e) override {
    return Prediction::of(e.source.find("while") != std::string::npos ? "W" : "F");
  }
  std::unique_ptr<Classifier> clone() const override {
    return std::make_unique<KeywordClassifier>();
  }
};

corpus::CorpusEntry entry(std::string id, std::string label = "Bubblesort") {
  corpus::CorpusEntry e;
  e.id = std::move(id);
  e.task = "sorting";
  e.label = std::move(label);
  e.source = std::string(testing::kBubble);
  e.inputs = testing::small_arrays(2);
  return e;
}

TEST(Metrics, FlipRateFixture) {
  harness::StabilityRow row{"VR", 1000, 42};
  EXPECT_DOUBLE_EQ(row.rate(), 0.042);
  EXPECT_EQ(harness::percent(row.rate()), "4.2%");
  EXPECT_EQ(harness::percent(harness::StabilityRow{"X", 0, 0}.rate()), "0.0%");
}

TEST(Metrics, MacroF1Fixture) {
  auto r = harness::score({"A", "A", "B", "B"}, {Prediction::of("A"), Prediction::of("B"),
                                                 Prediction::of("A"), Prediction::of("B")});
  EXPECT_DOUBLE_EQ(r.macro_f1, 0.5);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.5);
  ASSERT_EQ(r.labels.size(), 2u);
  EXPECT_DOUBLE_EQ(r.labels[0].precision, 0.5);
  EXPECT_DOUBLE_EQ(r.labels[0].recall, 0.5);
}

TEST(Metrics, ErrorsCountAsWrong) {
  auto r = harness::score({"A", "B"}, {Prediction::of("A"), Prediction::failure("boom")});
  EXPECT_EQ(r.correct, 1u);
  EXPECT_EQ(r.errors, 1u);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.5);
  EXPECT_EQ(r.confusion["B"][harness::kErrorColumn], 1u);
  // A: p=1 r=1; B: p=0/0 r=0.
  EXPECT_DOUBLE_EQ(r.macro_f1, 0.5);
}

TEST(Metrics, PredictedOnlyLabelsJoinTheMacroAverage) {
  auto r = harness::score({"A", "A"}, {Prediction::of("A"), Prediction::of("C")});
  ASSERT_EQ(r.labels.size(), 2u);
  EXPECT_EQ(r.labels[1].label, "C");
  EXPECT_EQ(r.labels[1].support, 0u);
  // A: p=1 r=0.5 f1=2/3; C: 0.
  EXPECT_NEAR(r.macro_f1, 1.0 / 3.0, 1e-12);
}

TEST(Metrics, ScoreRejectsBadInput) {
  EXPECT_THROW(harness::score({}, {}), std::invalid_argument);
  EXPECT_THROW(harness::score({"A"}, {}), std::invalid_argument);
  EXPECT_DOUBLE_EQ(harness::f1_score(0, 0), 0.0);
}

TEST(Evaluation, ParallelMatchesSerial) {
  std::vector<corpus::CorpusEntry> es;
  for (int k = 0; k < 9; ++k) es.push_back(entry("e" + std::to_string(k)));
  es[3].source = "int f(int[] a) { int i = 0; while (i < 1) { i += 1; } return 0; }\n";
  harness::Entries ptrs;
  for (const auto& e : es) ptrs.push_back(&e);
  KeywordClassifier c;
  auto serial = harness::classify_all(c, ptrs, 1);
  auto parallel = harness::classify_all(c, ptrs, 3);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) EXPECT_EQ(serial[k].label, parallel[k].label);
  EXPECT_EQ(serial[3].label, "W");
  EXPECT_THROW(harness::evaluate(c, {}), std::invalid_argument);
}

TEST(Stability, OmitsInapplicableRowsAndRejectsChanging) {
  auto e = entry("only");
  e.source = std::string(testing::kMaxScan);
  e.inputs = {{testing::ints({3, 1, 2})}};
  FixedClassifier c("MaxScan");
  std::vector<TransformKind> kinds{TransformKind::VR, TransformKind::CFR, TransformKind::NCS};
  auto t = harness::stability(c, {&e}, kinds);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0].kind, "VR");
  EXPECT_EQ(t.rows[0].applicable, 1u);
  EXPECT_EQ(t.rows[0].flipped, 0u);
  EXPECT_TRUE(t.aborted.empty());
  std::vector<TransformKind> strip{TransformKind::STRIP_ERROR_HANDLING};
  EXPECT_THROW(harness::stability(c, {&e}, strip), std::invalid_argument);
}

TEST(Stability, CountsFlips) {
  auto e = entry("loop");
  e.source = "int f(int[] a) {\n    int s = 0;\n    for (int i = 0; i < Length(a); i += 1) {\n"
             "        s += a[i];\n    }\n    return s;\n}\n";
  KeywordClassifier c;
  std::vector<TransformKind> kinds{TransformKind::CSU, TransformKind::VR};
  auto t = harness::stability(c, {&e}, kinds);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0].kind, "CSU");
  EXPECT_EQ(t.rows[0].flipped, 1u);
  EXPECT_EQ(t.rows[1].flipped, 0u);
  auto text = harness::format_stability(t, "keyword");
  EXPECT_NE(text.find("100.0%"), std::string::npos);
}

TEST(Scalability, BinsBySourceSize) {
  auto a = entry("a");
  auto b = entry("b", "MaxScan");
  b.source = std::string(testing::kMaxScan);
  EXPECT_EQ(harness::entry_size(a, harness::SizeSource::Source), 13u * 15u);
  EXPECT_EQ(harness::entry_size(b, harness::SizeSource::Source), 9u * 15u);
  FixedClassifier c("Bubblesort");
  auto bins = harness::scalability(c, {&a, &b}, 150);
  ASSERT_EQ(bins.size(), 2u);
  EXPECT_EQ(bins[0].lo, 0u);
  EXPECT_EQ(bins[0].hi, 150u);
  EXPECT_EQ(bins[0].count, 1u);
  EXPECT_DOUBLE_EQ(bins[0].accuracy, 0.0);
  EXPECT_EQ(bins[1].lo, 150u);
  EXPECT_DOUBLE_EQ(bins[1].accuracy, 1.0);
}

TEST(Baselines, StaticBagReactsToRenamingDynamicDoesNot) {
  auto m = corpus::split(corpus::generate_task("", 9, 21), {0.67, 0.0, 0.33}, 2);
  auto train = m.select(corpus::Split::Train);
  auto test = m.select(corpus::Split::Test);
  auto bag = harness::train_baseline(harness::BaselineKind::StaticBag, train);
  auto dyn = harness::train_baseline(harness::BaselineKind::DynamicTrace, train);
  EXPECT_EQ(bag->name(), "builtin:static-bag");
  EXPECT_GT(harness::evaluate(*bag, test).accuracy, 0.3);
  EXPECT_GT(harness::evaluate(*dyn, test).accuracy, 0.3);

  std::vector<TransformKind> kinds{TransformKind::VR, TransformKind::NCS, TransformKind::CFR,
                                   TransformKind::CSU};
  auto dt = harness::stability(*dyn, test, kinds);
  EXPECT_TRUE(dt.aborted.empty());
  for (const auto& row : dt.rows) EXPECT_EQ(row.flipped, 0u) << row.kind;
  for (auto k : kinds)
    for (const auto* e : test) {
      auto r = transforms::apply(k, e->program());
      if (r.applicable)
        EXPECT_TRUE(harness::data_traces_equal(e->program(), r.program, e->inputs)) << e->id;
    }
  EXPECT_THROW(harness::train_baseline(harness::BaselineKind::StaticBag, {}),
               std::invalid_argument);
}

TEST(Baselines, TraceFeaturesIgnoreNames) {
  auto p = testing::parse(testing::kInsertion);
  auto q = transforms::rename_variables(p, 8).program;
  auto suite = testing::small_arrays(3);
  EXPECT_EQ(harness::trace_features(p, suite), harness::trace_features(q, suite));
  EXPECT_NE(harness::token_bag(p), harness::token_bag(q));
}

// External classifier protocol against the scripted stub.

std::string stub(const std::string& args = "") { return std::string(COSET_STUB) + " " + args; }

harness::ExternalOptions fast(int deadline_ms = 5000) {
  harness::ExternalOptions o;
  o.deadline = std::chrono::milliseconds(deadline_ms);
  return o;
}

TEST(External, AnswersWithFixedLabel) {
  harness::ExternalClassifier c(stub("--label Selectionsort"), fast());
  for (int k = 0; k < 3; ++k) {
    auto p = c.classify(entry("x" + std::to_string(k)));
    EXPECT_FALSE(p.error) << p.message;
    EXPECT_EQ(p.label, "Selectionsort");
  }
  EXPECT_EQ(c.launches(), 1);
}

TEST(External, MalformedResponseIsAnErrorWithoutRestart) {
  harness::ExternalClassifier c(stub("--malformed-every 2"), fast());
  EXPECT_FALSE(c.classify(entry("a")).error);
  auto bad = c.classify(entry("b"));
  EXPECT_TRUE(bad.error);
  EXPECT_NE(bad.message.find("malformed"), std::string::npos);
  EXPECT_FALSE(c.classify(entry("c")).error);
  EXPECT_EQ(c.launches(), 1);
}

TEST(External, UnknownLabelAndWrongId) {
  auto o = fast();
  o.labels = {"Bubblesort"};
  harness::ExternalClassifier c(stub("--unknown-every 2 --wrong-id-every 3"), o);
  EXPECT_FALSE(c.classify(entry("a")).error);
  auto unknown = c.classify(entry("b"));
  EXPECT_TRUE(unknown.error);
  EXPECT_NE(unknown.message.find("unknown label"), std::string::npos);
  auto other = c.classify(entry("c"));
  EXPECT_TRUE(other.error);
  EXPECT_NE(other.message.find("another id"), std::string::npos);
  EXPECT_EQ(c.launches(), 1);
}

TEST(External, DeadlineRestartsTheProcess) {
  harness::ExternalClassifier c(stub("--sleep-on 2 --sleep-ms 3000"), fast(300));
  EXPECT_FALSE(c.classify(entry("a")).error);
  auto late = c.classify(entry("b"));
  EXPECT_TRUE(late.error);
  EXPECT_NE(late.message.find("deadline"), std::string::npos);
  auto next = c.classify(entry("c"));
  EXPECT_FALSE(next.error) << next.message;
  EXPECT_EQ(c.launches(), 2);
}

TEST(External, ExitRestartsTheProcess) {
  harness::ExternalClassifier c(stub("--exit-after 2"), fast());
  EXPECT_FALSE(c.classify(entry("a")).error);
  EXPECT_FALSE(c.classify(entry("b")).error);
  EXPECT_TRUE(c.classify(entry("c")).error);
  EXPECT_FALSE(c.classify(entry("d")).error);
  EXPECT_EQ(c.launches(), 2);
}

TEST(External, GivesUpAfterRepeatedFailures) {
  harness::ExternalClassifier c("exit 0", fast());
  for (int k = 0; k < 6; ++k) EXPECT_TRUE(c.classify(entry("a")).error);
  EXPECT_TRUE(c.dead());
  EXPECT_EQ(c.launches(), 4);
}

TEST(External, EvaluationSurvivesFaults) {
  std::vector<corpus::CorpusEntry> es;
  for (int k = 0; k < 6; ++k) es.push_back(entry("e" + std::to_string(k)));
  harness::Entries ptrs;
  for (const auto& e : es) ptrs.push_back(&e);
  harness::ExternalClassifier c(stub("--malformed-every 3"), fast());
  auto r = harness::evaluate(c, ptrs);
  EXPECT_EQ(r.total, 6u);
  EXPECT_EQ(r.errors, 2u);
  EXPECT_EQ(r.correct, 4u);
}

}  // namespace
}  // namespace coset
