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

#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "coset/corpus/catalog.hpp"
#include "coset/corpus/generator.hpp"
#include "coset/corpus/manifest.hpp"
#include "coset/lang/printer.hpp"
#include "fixtures.hpp"

namespace coset {
namespace {

namespace fs = std::filesystem;

std::vector<corpus::CorpusEntry> small_corpus(std::uint64_t seed = 5) {
  return corpus::generate_task("", 6, seed);
}

TEST(Catalog, EveryLabelBelongsToATask) {
  EXPECT_EQ(corpus::labels().size(), 9u);
  for (const auto& l : corpus::labels()) {
    ASSERT_NE(corpus::find_task(l.task), nullptr) << l.label;
    EXPECT_FALSE(l.checks.empty());
  }
  EXPECT_EQ(corpus::labels_of("sorting").size(), 3u);
  EXPECT_EQ(corpus::find_label("Quicksort"), nullptr);
}

TEST(Catalog, ReferenceSortsDeriveTheirLabels) {
  const auto& task = *corpus::find_task("sorting");
  auto suite = corpus::certification_suite(task, corpus::input_suite(task, 1));
  EXPECT_EQ(corpus::derive_label(task, testing::parse(testing::kBubble), suite), "Bubblesort");
  EXPECT_EQ(corpus::derive_label(task, testing::parse(testing::kInsertion), suite),
            "Insertionsort");
  EXPECT_EQ(corpus::derive_label(task, testing::parse(testing::kSelection), suite),
            "Selectionsort");
  const auto& agg = *corpus::find_task("aggregate");
  auto agg_suite = corpus::certification_suite(agg, corpus::input_suite(agg, 1));
  EXPECT_EQ(corpus::derive_label(agg, testing::parse(testing::kMaxScan), agg_suite), "MaxScan");
}

TEST(Catalog, P3DoesNotApplyToSearch) {
  EXPECT_FALSE(corpus::applies(*corpus::find_task("search"), oracle::kBubbleInvariant));
  EXPECT_TRUE(corpus::applies(*corpus::find_task("sorting"), oracle::kBubbleInvariant));
}

TEST(Catalog, InputSuitesAreSeeded) {
  const auto& task = *corpus::find_task("difference");
  auto a = corpus::input_suite(task, 3);
  auto b = corpus::input_suite(task, 3);
  auto c = corpus::input_suite(task, 4);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Generator, DeterministicPerSeed) {
  auto a = corpus::generate("sorting", "Bubblesort", 6, 9);
  auto b = corpus::generate("sorting", "Bubblesort", 6, 9);
  ASSERT_EQ(a.size(), 6u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].id, b[k].id);
    EXPECT_EQ(a[k].source, b[k].source);
  }
  auto c = corpus::generate("sorting", "Bubblesort", 6, 10);
  EXPECT_NE(a[0].source, c[0].source);
}

TEST(Generator, EntriesAreDistinctCanonicalAndLabelled) {
  auto entries = small_corpus();
  EXPECT_EQ(entries.size(), 54u);
  std::set<std::string> sources, ids;
  for (const auto& e : entries) {
    EXPECT_TRUE(sources.insert(e.source).second) << e.id;
    EXPECT_TRUE(ids.insert(e.id).second);
    auto p = e.program();
    EXPECT_EQ(lang::print(p), e.source);
    const auto& task = *corpus::find_task(e.task);
    EXPECT_EQ(corpus::derive_label(task, p, corpus::certification_suite(task, e.inputs)),
              e.label)
        << e.id;
  }
}

TEST(Generator, FamiliesOfThree) {
  auto entries = corpus::generate("search", "LinearSearch", 6, 2);
  std::map<std::string, std::set<std::string>> families;
  for (const auto& e : entries) families[e.family].insert(e.variant);
  EXPECT_EQ(families.size(), 2u);
  for (const auto& [f, variants] : families)
    EXPECT_EQ(variants, (std::set<std::string>{"base", "permuted", "renamed"})) << f;
}

TEST(Generator, RejectsUnknownLabel) {
  EXPECT_THROW(corpus::generate("sorting", "MaxScan", 3, 1), std::invalid_argument);
  EXPECT_THROW(corpus::generate("nope", "Bubblesort", 3, 1), std::invalid_argument);
}

TEST(Manifest, StratifiedDisjointSplit) {
  auto m = corpus::split(small_corpus(), {0.5, 0.25, 0.25}, 3);
  std::map<std::string, std::array<int, 3>> per_label;
  for (const auto& e : m.entries) ++per_label[e.label][static_cast<int>(e.split)];
  for (const auto& [label, counts] : per_label) {
    EXPECT_EQ(counts[0], 3) << label;
    EXPECT_EQ(counts[1] + counts[2], 3) << label;
  }
  EXPECT_EQ(m.select(corpus::Split::Train).size() + m.select(corpus::Split::Valid).size() +
                m.select(corpus::Split::Test).size(),
            m.entries.size());
  auto again = corpus::split(small_corpus(), {0.5, 0.25, 0.25}, 3);
  for (std::size_t k = 0; k < m.entries.size(); ++k)
    EXPECT_EQ(m.entries[k].split, again.entries[k].split);
}

TEST(Manifest, RejectsBadRatios) {
  EXPECT_THROW(corpus::split({}, {0.5, 0.5, 0.5}, 1), std::invalid_argument);
  EXPECT_THROW(corpus::split({}, {1.2, -0.1, -0.1}, 1), std::invalid_argument);
}

TEST(Manifest, SaveLoadRoundTrip) {
  auto m = corpus::split(small_corpus(), {0.76, 0.12, 0.12}, 1);
  m.generator_seeds["all"] = 5;
  fs::path dir = fs::temp_directory_path() / "coset-corpus-test";
  fs::remove_all(dir);
  corpus::save(m, dir);
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
  auto back = corpus::load(dir);
  auto via_file = corpus::load(dir / "manifest.json");
  ASSERT_EQ(back.entries.size(), m.entries.size());
  EXPECT_EQ(via_file.entries.size(), m.entries.size());
  EXPECT_EQ(back.split_seed, 1u);
  EXPECT_EQ(back.generator_seeds, m.generator_seeds);
  for (std::size_t k = 0; k < m.entries.size(); ++k) {
    const auto& a = m.entries[k];
    const auto& b = back.entries[k];
    EXPECT_EQ(a.id, b.id);
    EXPECT_EQ(a.source, b.source);
    EXPECT_EQ(a.label, b.label);
    EXPECT_EQ(a.split, b.split);
    EXPECT_EQ(a.inputs, b.inputs) << a.id;
  }
  fs::remove_all(dir);
}

TEST(Manifest, LoadFailures) {
  EXPECT_THROW(corpus::load("/nonexistent/coset"), std::runtime_error);
  fs::path dir = fs::temp_directory_path() / "coset-bad-manifest";
  fs::create_directories(dir);
  {
    std::ofstream(dir / "manifest.json") << R"({"schema": "other/1", "entries": []})";
  }
  EXPECT_THROW(corpus::load(dir), std::runtime_error);
  fs::remove_all(dir);
}

TEST(Manifest, RelabelByP3) {
  auto m = corpus::split(corpus::generate_task("sorting", 3, 4), {1.0, 0.0, 0.0}, 1);
  auto r = corpus::relabel_by_property(m, oracle::kBubbleInvariant);
  EXPECT_EQ(corpus::positive_label(oracle::kBubbleInvariant), "P3");
  EXPECT_EQ(corpus::negative_label(oracle::kBubbleInvariant), "not-P3");
  for (std::size_t k = 0; k < m.entries.size(); ++k) {
    bool bubble = m.entries[k].label == "Bubblesort";
    EXPECT_EQ(r.entries[k].label, bubble ? "P3" : "not-P3") << m.entries[k].id;
  }
}

}  // namespace
}  // namespace coset
