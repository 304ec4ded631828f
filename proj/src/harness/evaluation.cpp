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

#include "coset/harness/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <thread>

#include "coset/interp/trace.hpp"
#include "coset/lang/printer.hpp"
#include "coset/oracle/differential.hpp"

namespace coset::harness {

using transforms::Contract;
using transforms::TransformKind;

namespace {

std::vector<std::string> truth_of(const Entries& entries) {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto* e : entries) out.push_back(e->label);
  return out;
}

bool same(const Prediction& a, const Prediction& b) {
  return a.error == b.error && a.label == b.label;
}

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string fixed(double x, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

std::vector<Prediction> classify_all(Classifier& c, const Entries& entries, unsigned jobs) {
  std::vector<Prediction> out(entries.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  if (jobs <= 1) {
    for (std::size_t k = 0; k < entries.size(); ++k) out[k] = c.classify(*entries[k]);
    return out;
  }
  std::vector<std::unique_ptr<Classifier>> clones;
  for (unsigned w = 1; w < jobs; ++w) clones.push_back(c.clone());
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < jobs; ++w) {
    Classifier& h = w == 0 ? c : *clones[w - 1];
    threads.emplace_back([&, w, handle = &h] {
      for (std::size_t k = w; k < entries.size(); k += jobs) out[k] = handle->classify(*entries[k]);
    });
  }
  for (auto& t : threads) t.join();
  return out;
}

EvalReport evaluate(Classifier& c, const Entries& test, unsigned jobs) {
  if (test.empty()) throw std::invalid_argument("empty test set");
  return score(truth_of(test), classify_all(c, test, jobs));
}

corpus::CorpusEntry with_program(const corpus::CorpusEntry& e, const lang::Program& p) {
  corpus::CorpusEntry out = e;
  out.source = lang::print(p);
  return out;
}

bool data_traces_equal(const lang::Program& a, const lang::Program& b,
                       const oracle::Suite& inputs) {
  const interp::Interpreter ia(a), ib(b);
  for (const auto& input : inputs)
    if (!(interp::trace(ia, input).trace.data_projection() ==
          interp::trace(ib, input).trace.data_projection()))
      return false;
  return true;
}

StabilityTable stability(Classifier& c, const Entries& test,
                         std::span<const TransformKind> kinds,
                         const StabilityOptions& options) {
  for (auto k : kinds)
    if (transforms::contract_of(k) == Contract::Changing)
      throw std::invalid_argument(std::string("stability is undefined for ") +
                                  transforms::to_string(k));
  StabilityTable table;
  std::optional<std::vector<Prediction>> original;
  for (auto kind : kinds) {
    const auto mode = transforms::contract_of(kind) == Contract::Preserving
                          ? oracle::Mode::Exact
                          : oracle::Mode::Approximating;
    Entries applicable;
    std::vector<corpus::CorpusEntry> variants;
    variants.reserve(test.size());
    bool broken = false;
    for (const auto* e : test) {
      const auto p = e->program();
      auto r = transforms::apply(kind, p, options.config);
      if (!r.applicable) continue;
      auto v = oracle::differential_check(p, r.program, e->inputs, mode);
      if (!v.pass) {
        table.aborted[transforms::to_string(kind)] = e->id + ": " + oracle::describe(v);
        broken = true;
        break;
      }
      applicable.push_back(e);
      variants.push_back(with_program(*e, r.program));
    }
    if (broken || applicable.empty()) continue;
    if (!original) original = classify_all(c, test, options.jobs);
    Entries transformed;
    for (const auto& v : variants) transformed.push_back(&v);
    const auto after = classify_all(c, transformed, options.jobs);

    StabilityRow row;
    row.kind = transforms::to_string(kind);
    row.applicable = applicable.size();
    for (std::size_t k = 0, t = 0; k < test.size() && t < applicable.size(); ++k) {
      if (test[k] != applicable[t]) continue;
      row.flipped += !same((*original)[k], after[t]);
      ++t;
    }
    table.rows.push_back(row);
  }
  return table;
}

const char* to_string(SizeSource s) { return s == SizeSource::Source ? "source" : "trace"; }

std::size_t entry_size(const corpus::CorpusEntry& e, SizeSource source) {
  const auto p = e.program();
  if (source == SizeSource::Source || e.inputs.empty()) return interp::normalized_size(p);
  const interp::Interpreter in(p);
  double sum = 0;
  for (const auto& input : e.inputs)
    sum += static_cast<double>(interp::normalized_size(interp::trace(in, input).trace));
  return static_cast<std::size_t>(std::llround(sum / static_cast<double>(e.inputs.size())));
}

std::vector<SizeBin> scalability(Classifier& c, const Entries& test, std::size_t bin_width,
                                 SizeSource source, unsigned jobs) {
  if (bin_width == 0) throw std::invalid_argument("bin width must be positive");
  if (test.empty()) throw std::invalid_argument("empty test set");
  const auto predicted = classify_all(c, test, jobs);
  std::map<std::size_t, std::pair<std::vector<std::string>, std::vector<Prediction>>> bins;
  for (std::size_t k = 0; k < test.size(); ++k) {
    auto& [truth, preds] = bins[entry_size(*test[k], source) / bin_width];
    truth.push_back(test[k]->label);
    preds.push_back(predicted[k]);
  }
  std::vector<SizeBin> out;
  for (const auto& [index, data] : bins) {
    const auto r = score(data.first, data.second);
    out.push_back({index * bin_width, (index + 1) * bin_width, r.total, r.accuracy, r.macro_f1});
  }
  return out;
}

std::string format_stability(const StabilityTable& t, const std::string& model) {
  std::string out = pad("Transformation", 24) + pad("Applicable", 12) + pad("Flipped", 10) +
                    model + "\n";
  for (const auto& r : t.rows)
    out += pad(r.kind, 24) + pad(std::to_string(r.applicable), 12) +
           pad(std::to_string(r.flipped), 10) + percent(r.rate()) + "\n";
  for (const auto& [kind, why] : t.aborted) out += pad(kind, 24) + "aborted: " + why + "\n";
  return out;
}

std::string format_report(const EvalReport& r) {
  std::string out = "accuracy " + fixed(r.accuracy, 4) + "  macro-F1 " + fixed(r.macro_f1, 4) +
                    "  entries " + std::to_string(r.total) + "  errors " +
                    std::to_string(r.errors) + "\n";
  out += pad("label", 22) + pad("support", 9) + pad("precision", 11) + pad("recall", 9) + "F1\n";
  for (const auto& l : r.labels)
    out += pad(l.label, 22) + pad(std::to_string(l.support), 9) + pad(fixed(l.precision, 4), 11) +
           pad(fixed(l.recall, 4), 9) + fixed(l.f1, 4) + "\n";
  return out;
}

std::string format_bins(const std::vector<SizeBin>& bins) {
  std::string out = pad("bytes", 14) + pad("entries", 9) + pad("accuracy", 10) + "macro-F1\n";
  for (const auto& b : bins)
    out += pad("[" + std::to_string(b.lo) + "," + std::to_string(b.hi) + ")", 14) +
           pad(std::to_string(b.count), 9) + pad(fixed(b.accuracy, 4), 10) + fixed(b.macro_f1, 4) +
           "\n";
  return out;
}

}  // namespace coset::harness
