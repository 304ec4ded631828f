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

#include "coset/debugger/minimize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "coset/harness/evaluation.hpp"
#include "coset/lang/printer.hpp"

namespace coset::debugger {

using transforms::Contract;

namespace {

oracle::Mode mode_of(Contract c) {
  switch (c) {
    case Contract::Preserving: return oracle::Mode::Exact;
    case Contract::Approximating: return oracle::Mode::Approximating;
    case Contract::Changing: return oracle::Mode::ExpectDivergence;
  }
  return oracle::Mode::Exact;
}

class Search {
 public:
  Search(harness::Classifier& c, const corpus::CorpusEntry& entry, const lang::Program& p,
         const std::vector<AtomicEdit>& edits, const std::string& target, std::size_t budget)
      : c_(c), entry_(entry), p_(p), edits_(edits), target_(target), budget_(budget) {}

  /// Whether applying the edits at `idx` yields the target label.
  bool test(std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    auto [it, fresh] = cache_.try_emplace(idx, false);
    if (!fresh) return it->second;
    if (calls_ >= budget_) return false;
    std::vector<AtomicEdit> set;
    for (auto k : idx) set.push_back(edits_[k]);
    auto q = apply_edits(p_, set);
    if (!q) return false;
    ++calls_;
    auto pred = c_.classify(harness::with_program(entry_, *q));
    it->second = !pred.error && pred.label == target_;
    return it->second;
  }

  /// Zeller's ddmin; `c` must pass `test`.
  std::vector<std::size_t> ddmin(std::vector<std::size_t> c) {
    std::size_t n = 2;
    while (c.size() >= 2) {
      const auto chunks = split(c, n);
      bool reduced = false;
      for (const auto& chunk : chunks)
        if (test(chunk)) {
          c = chunk;
          n = 2;
          reduced = true;
          break;
        }
      if (!reduced)
        for (std::size_t k = 0; k < chunks.size(); ++k) {
          std::vector<std::size_t> rest;
          for (std::size_t m = 0; m < chunks.size(); ++m)
            if (m != k) rest.insert(rest.end(), chunks[m].begin(), chunks[m].end());
          if (test(rest)) {
            c = rest;
            n = std::max<std::size_t>(n - 1, 2);
            reduced = true;
            break;
          }
        }
      if (reduced) continue;
      if (n >= c.size()) break;
      n = std::min(n * 2, c.size());
    }
    return c;
  }

  /// Conflict-free set built greedily, starting from `seed` when given.
  std::vector<std::size_t> greedy(std::optional<std::size_t> seed,
                                  std::vector<std::size_t>* skipped) {
    std::vector<std::size_t> set;
    if (seed) set.push_back(*seed);
    for (std::size_t k = 0; k < edits_.size(); ++k) {
      if (seed && k == *seed) continue;
      bool clash = std::any_of(set.begin(), set.end(),
                               [&](std::size_t m) { return conflicts(edits_[m], edits_[k]); });
      if (clash) {
        if (skipped) skipped->push_back(k);
      } else {
        set.push_back(k);
      }
    }
    return set;
  }

  std::size_t calls() const { return calls_; }

 private:
  static std::vector<std::vector<std::size_t>> split(const std::vector<std::size_t>& c,
                                                     std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::size_t start = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t end = start + (c.size() - start) / (n - k);
      out.emplace_back(c.begin() + static_cast<std::ptrdiff_t>(start),
                       c.begin() + static_cast<std::ptrdiff_t>(end));
      start = end;
    }
    return out;
  }

  harness::Classifier& c_;
  const corpus::CorpusEntry& entry_;
  const lang::Program& p_;
  const std::vector<AtomicEdit>& edits_;
  const std::string& target_;
  std::size_t budget_;
  std::size_t calls_ = 0;
  std::map<std::vector<std::size_t>, bool> cache_;
};

}  // namespace

const char* tag_of(EditKind k) {
  switch (k) {
    case EditKind::Swap:
    case EditKind::Rename: return "variable-name sensitivity";
    case EditKind::TypeSwap: return "type-name sensitivity";
    case EditKind::ApiSwap: return "API generalization";
    case EditKind::SwitchToIf: return "control-structure bias";
    case EditKind::GuardRemoval: return "guard sensitivity";
  }
  return "?";
}

RootCauseReport minimize_flip(harness::Classifier& c, const corpus::CorpusEntry& entry,
                              const std::string& target, const MinimizeOptions& options) {
  const auto p = entry.program();
  RootCauseReport r;
  r.entry_id = entry.id;
  r.target = target;
  auto first = c.classify(entry);
  r.original_prediction = first.error ? "<error>" : first.label;
  if (!first.error && first.label == target)
    throw std::invalid_argument(entry.id + " is already classified as " + target);

  std::vector<AtomicEdit> edits;
  std::map<std::size_t, EditVerdict> verdicts;
  for (auto& e : edit_universe(p, {options.guard_probe})) {
    auto q = apply_edits(p, {e});
    EditVerdict v{e, mode_of(e.contract), false, 0};
    if (q) {
      auto check = oracle::differential_check(p, *q, entry.inputs, v.mode);
      v.pass = check.pass;
      v.divergences = check.divergences();
    }
    if (v.pass) {
      verdicts.emplace(edits.size(), v);
      edits.push_back(e);
    } else {
      r.discarded.push_back(v);
    }
  }
  r.universe = edits.size();
  if (edits.empty()) return r;

  Search search(c, entry, p, edits, target, options.max_classifications);
  std::vector<std::size_t> skipped;
  std::optional<std::vector<std::size_t>> found;
  auto start = search.greedy(std::nullopt, &skipped);
  if (search.test(start)) found = start;
  for (std::size_t k = 0; !found && k < skipped.size(); ++k) {
    auto seeded = search.greedy(skipped[k], nullptr);
    if (search.test(seeded)) found = seeded;
  }
  if (found) {
    auto minimal = search.ddmin(*found);
    std::sort(minimal.begin(), minimal.end());
    std::vector<std::string> tags;
    for (auto k : minimal) {
      r.edits.push_back(edits[k]);
      r.verdicts.push_back(verdicts.at(k));
      std::string tag = tag_of(edits[k].kind);
      if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
    }
    for (const auto& t : tags) r.tag += (r.tag.empty() ? "" : ", ") + t;
    r.flipped = true;
    r.edited_source = lang::print(*apply_edits(p, r.edits));
  }
  r.classifications = search.calls() + 1;
  return r;
}

std::string narrative(const RootCauseReport& r) {
  std::string out = "entry " + r.entry_id + ": predicted " + r.original_prediction +
                    ", target " + r.target + "\n";
  if (!r.flipped) {
    out += "no subset of the " + std::to_string(r.universe) +
           " verified edits changes the prediction to " + r.target + "\n";
    return out;
  }
  out += "minimal edit set (" + std::to_string(r.edits.size()) + " of " +
         std::to_string(r.universe) + " verified edits):\n";
  for (const auto& v : r.verdicts)
    out += "  - " + v.edit.describe() + " [" + transforms::to_string(v.edit.contract) +
           ", oracle " + oracle::to_string(v.mode) + ": " + (v.pass ? "pass" : "fail") + "]\n";
  out += "cause: " + r.tag + "\n";
  return out;
}

}  // namespace coset::debugger
