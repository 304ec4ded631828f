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

#include "coset/harness/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <stdexcept>

#include "coset/interp/trace.hpp"
#include "coset/lang/printer.hpp"

namespace coset::harness {

using interp::Value;

namespace {

using Bag = std::map<std::string, double>;

double norm(const Bag& b) {
  double s = 0;
  for (const auto& [_, v] : b) s += v * v;
  return std::sqrt(s);
}

double dot(const Bag& a, const Bag& b) {
  const Bag& small = a.size() < b.size() ? a : b;
  const Bag& large = a.size() < b.size() ? b : a;
  double s = 0;
  for (const auto& [k, v] : small) {
    auto it = large.find(k);
    if (it != large.end()) s += v * it->second;
  }
  return s;
}

class StaticBag final : public Classifier {
 public:
  explicit StaticBag(std::map<std::string, Bag> centroids) : centroids_(std::move(centroids)) {}

  std::string name() const override { return "builtin:static-bag"; }

  Prediction classify(const corpus::CorpusEntry& e) override {
    Bag bag;
    try {
      bag = token_bag(e.program());
    } catch (const std::exception& ex) {
      return Prediction::failure(ex.what());
    }
    const double n = norm(bag);
    std::string best;
    double best_sim = -1;
    for (const auto& [label, c] : centroids_) {
      const double d = n * norm(c);
      const double sim = d == 0 ? 0 : dot(bag, c) / d;
      if (sim > best_sim) best_sim = sim, best = label;
    }
    return Prediction::of(best);
  }

  std::unique_ptr<Classifier> clone() const override {
    return std::make_unique<StaticBag>(*this);
  }

 private:
  std::map<std::string, Bag> centroids_;
};

class DynamicTrace final : public Classifier {
 public:
  DynamicTrace(std::map<std::string, TraceFeatures> centroids, TraceFeatures mean,
               TraceFeatures scale)
      : centroids_(std::move(centroids)), mean_(mean), scale_(scale) {}

  std::string name() const override { return "builtin:dynamic-trace"; }

  Prediction classify(const corpus::CorpusEntry& e) override {
    TraceFeatures f;
    try {
      f = standardize(trace_features(e.program(), e.inputs));
    } catch (const std::exception& ex) {
      return Prediction::failure(ex.what());
    }
    std::string best;
    double best_d = INFINITY;
    for (const auto& [label, c] : centroids_) {
      double d = 0;
      for (std::size_t k = 0; k < kTraceFeatures; ++k) d += (f[k] - c[k]) * (f[k] - c[k]);
      if (d < best_d) best_d = d, best = label;
    }
    return Prediction::of(best);
  }

  std::unique_ptr<Classifier> clone() const override {
    return std::make_unique<DynamicTrace>(*this);
  }

  TraceFeatures standardize(TraceFeatures f) const {
    for (std::size_t k = 0; k < kTraceFeatures; ++k) f[k] = (f[k] - mean_[k]) / scale_[k];
    return f;
  }

 private:
  std::map<std::string, TraceFeatures> centroids_;
  TraceFeatures mean_;
  TraceFeatures scale_;
};

std::vector<Value> sorted_elements(const Value& v) {
  std::vector<Value> xs = *v.a;
  std::sort(xs.begin(), xs.end(), [](const Value& x, const Value& y) {
    return x.i != y.i ? x.i < y.i : x.f < y.f;
  });
  return xs;
}

bool is_scalar_integral(const Value& v) { return v.type.is_integral(); }

}  // namespace

const char* to_string(BaselineKind k) {
  return k == BaselineKind::StaticBag ? "static-bag" : "dynamic-trace";
}

std::optional<BaselineKind> parse_baseline(std::string_view s) {
  if (s == "static-bag") return BaselineKind::StaticBag;
  if (s == "dynamic-trace") return BaselineKind::DynamicTrace;
  return std::nullopt;
}

Bag token_bag(const lang::Program& p) {
  static const std::regex kToken(R"([A-Za-z_][A-Za-z0-9_]*|[0-9]+(\.[0-9]+)?|&&|\|\||[<>=!+\-*/%]=|\S)");
  const std::string text = lang::print(p);
  Bag bag;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kToken);
       it != std::sregex_iterator(); ++it)
    bag[it->str()] += 1;
  return bag;
}

TraceFeatures trace_features(const lang::Program& p, const oracle::Suite& inputs) {
  TraceFeatures sum{};
  if (inputs.empty()) return sum;
  const interp::Interpreter in(p);
  for (const auto& input : inputs) {
    double len = 0;
    std::vector<Value> initial;
    for (const auto& v : input)
      if (v.a) {
        len = static_cast<double>(v.a->size());
        initial = sorted_elements(v);
        break;
      }
    const auto t = interp::trace(in, input).trace.data_projection();
    const double l1 = len + 1;
    const double snaps = static_cast<double>(t.snapshots.size());
    double array_writes = 0, restores = 0, scalar_writes = 0, delta = 0, deltas = 0, units = 0;
    std::map<int, Value> last;
    for (const auto& s : t.snapshots) {
      if (s.value.a) {
        ++array_writes;
        if (sorted_elements(s.value) == initial) ++restores;
      } else {
        ++scalar_writes;
        auto it = last.find(s.slot);
        if (it != last.end() && is_scalar_integral(s.value) && is_scalar_integral(it->second)) {
          const double d = static_cast<double>(s.value.i - it->second.i);
          delta += std::abs(d);
          ++deltas;
          units += d == 1;
        }
      }
      last[s.slot] = s.value;
    }
    sum[0] += snaps / l1;
    sum[1] += snaps / (l1 * l1);
    sum[2] += snaps == 0 ? 0 : array_writes / snaps;
    sum[3] += restores / (l1 * l1);
    sum[4] += static_cast<double>(last.size());
    sum[5] += deltas == 0 ? 0 : delta / deltas;
    sum[6] += scalar_writes == 0 ? 0 : units / scalar_writes;
  }
  for (auto& x : sum) x /= static_cast<double>(inputs.size());
  return sum;
}

std::unique_ptr<Classifier> train_baseline(
    BaselineKind kind, const std::vector<const corpus::CorpusEntry*>& train) {
  if (train.empty()) throw std::invalid_argument("empty training set");
  if (kind == BaselineKind::StaticBag) {
    std::map<std::string, Bag> centroids;
    for (const auto* e : train) {
      Bag bag = token_bag(e->program());
      const double n = norm(bag);
      auto& c = centroids[e->label];
      for (const auto& [k, v] : bag) c[k] += n == 0 ? 0 : v / n;
    }
    return std::make_unique<StaticBag>(std::move(centroids));
  }

  std::vector<std::pair<std::string, TraceFeatures>> rows;
  TraceFeatures mean{}, scale{};
  for (const auto* e : train) {
    rows.emplace_back(e->label, trace_features(e->program(), e->inputs));
    for (std::size_t k = 0; k < kTraceFeatures; ++k) mean[k] += rows.back().second[k];
  }
  const auto n = static_cast<double>(rows.size());
  for (auto& m : mean) m /= n;
  for (const auto& [_, f] : rows)
    for (std::size_t k = 0; k < kTraceFeatures; ++k) scale[k] += (f[k] - mean[k]) * (f[k] - mean[k]);
  for (auto& s : scale) {
    s = std::sqrt(s / n);
    if (s < 1e-12) s = 1;
  }
  DynamicTrace proto({}, mean, scale);
  std::map<std::string, TraceFeatures> centroids;
  std::map<std::string, double> counts;
  for (const auto& [label, f] : rows) {
    const auto z = proto.standardize(f);
    auto& c = centroids[label];
    for (std::size_t k = 0; k < kTraceFeatures; ++k) c[k] += z[k];
    counts[label] += 1;
  }
  for (auto& [label, c] : centroids)
    for (auto& x : c) x /= counts[label];
  return std::make_unique<DynamicTrace>(std::move(centroids), mean, scale);
}

}  // namespace coset::harness
