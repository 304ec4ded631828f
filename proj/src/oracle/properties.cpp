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

#include "coset/oracle/properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace coset::oracle {

using interp::Value;
using lang::Stmt;
using lang::StmtKind;

namespace {

bool less(const Value& x, const Value& y) {
  if (x.type.is_floating()) return x.f < y.f;
  return x.i < y.i;
}

int array_param(const lang::Function& f) {
  for (std::size_t k = 0; k < f.params.size(); ++k)
    if (f.params[k].type.array) return static_cast<int>(k);
  return -1;
}

int key_param(const lang::Function& f) {
  for (std::size_t k = 0; k < f.params.size(); ++k)
    if (!f.params[k].type.array) return static_cast<int>(k);
  return -1;
}

bool contains_loop(const std::vector<Stmt>& body) {
  bool found = false;
  lang::visit_stmts(body, [&](const Stmt& s) { found = found || s.is_loop(); });
  return found;
}

// Loops of `body` not nested in another loop, in source order.
void outermost_loops(const std::vector<Stmt>& body, std::vector<const Stmt*>& out) {
  for (const auto& s : body) {
    if (s.is_loop()) {
      out.push_back(&s);
      continue;
    }
    outermost_loops(s.body, out);
    outermost_loops(s.else_body, out);
    for (const auto& c : s.cases) outermost_loops(c.body, out);
    if (s.default_body) outermost_loops(*s.default_body, out);
  }
}

bool has_loop_nest(const std::vector<const Stmt*>& loops) {
  return std::any_of(loops.begin(), loops.end(),
                     [](const Stmt* l) { return contains_loop(l->body); });
}

// Checks an invariant at every completed iteration of each outermost loop
// of the entry, per loop.
class LoopInvariantObserver : public interp::ExecutionObserver {
 public:
  using Predicate = bool (*)(const interp::Array& now,
                             const std::vector<Value>& sorted_input,
                             std::size_t iterations);

  LoopInvariantObserver(const std::vector<lang::NodeId>& loops, int slot,
                        std::vector<Value> sorted_input, Predicate pred)
      : slot_(slot), sorted_(std::move(sorted_input)), pred_(pred) {
    for (auto id : loops) state_[id] = {0, true};
  }

  void on_iteration_end(const Stmt& loop, int depth,
                        std::span<const Value> frame) override {
    if (depth != 1) return;
    auto it = state_.find(loop.id);
    if (it == state_.end() || !it->second.ok) return;
    ++it->second.iterations;
    const Value& a = frame[static_cast<std::size_t>(slot_)];
    if (!a.a || !pred_(*a.a, sorted_, it->second.iterations)) it->second.ok = false;
  }

  bool holds(lang::NodeId loop) const { return state_.at(loop).ok; }

 private:
  struct LoopState {
    std::size_t iterations;
    bool ok;
  };
  int slot_;
  std::vector<Value> sorted_;
  Predicate pred_;
  std::map<lang::NodeId, LoopState> state_;
};

bool sorted_suffix(const interp::Array& a, const std::vector<Value>&,
                   std::size_t i) {
  const std::size_t len = a.size();
  const std::size_t lo = i >= len ? 1 : std::max<std::size_t>(1, len - i);
  for (std::size_t j = lo; j < len; ++j)
    if (less(a[j], a[j - 1])) return false;
  return true;
}

bool prefix_of_minima(const interp::Array& a, const std::vector<Value>& sorted,
                      std::size_t i) {
  const std::size_t m = std::min(i, a.size());
  for (std::size_t k = 0; k < m; ++k)
    if (less(a[k], sorted[k]) || less(sorted[k], a[k])) return false;
  return true;
}

PropertyResult check_loop_invariant(const lang::Program& p, const Suite& suite,
                                    LoopInvariantObserver::Predicate pred,
                                    const interp::RunOptions& options) {
  PropertyResult res;
  const auto& entry = p.entry();
  std::vector<const Stmt*> loops;
  outermost_loops(entry.body, loops);
  int slot = array_param(entry);
  if (slot < 0 || !has_loop_nest(loops)) {
    res.applicable = false;
    res.note = slot < 0 ? "entry takes no array" : "entry has no loop nest";
    return res;
  }
  std::vector<lang::NodeId> ids;
  for (const auto* l : loops) ids.push_back(l->id);
  std::map<lang::NodeId, bool> holds;
  for (auto id : ids) holds[id] = true;
  // Witness for the first loop that contains a nested loop.
  lang::NodeId main_loop = 0;
  for (const auto* l : loops)
    if (!main_loop && contains_loop(l->body)) main_loop = l->id;

  interp::Interpreter in(p, options);
  for (const auto& input : suite) {
    const auto& arr = input[static_cast<std::size_t>(slot)];
    std::vector<Value> sorted = arr.a ? *arr.a : interp::Array{};
    std::stable_sort(sorted.begin(), sorted.end(), less);
    LoopInvariantObserver obs(ids, slot, std::move(sorted), pred);
    in.run(input, &obs);
    ++res.inputs_checked;
    for (auto id : ids) {
      if (holds[id] && !obs.holds(id)) {
        holds[id] = false;
        if (id == main_loop) res.witness = input;
      }
    }
  }
  res.holds = std::any_of(holds.begin(), holds.end(),
                          [](const auto& kv) { return kv.second; });
  if (res.holds) res.witness.reset();
  if (loops.size() > 1) res.note = "checked " + std::to_string(loops.size()) + " outermost loops";
  return res;
}

PropertyResult check_sorted(const lang::Program& p, const Suite& suite,
                            const interp::RunOptions& options) {
  PropertyResult res;
  const auto& entry = p.entry();
  int slot = array_param(entry);
  bool returns_array = entry.return_type.array;
  if (slot < 0 && !returns_array) {
    res.applicable = false;
    res.note = "entry has no array";
    return res;
  }
  interp::Interpreter in(p, options);
  res.holds = true;
  for (const auto& input : suite) {
    auto out = in.run(input);
    ++res.inputs_checked;
    const Value* arr = nullptr;
    if (!out.fault) {
      arr = returns_array ? &*out.returned
                          : &out.final_args[static_cast<std::size_t>(slot)];
    }
    bool ok = arr && arr->a &&
              std::is_sorted(arr->a->begin(), arr->a->end(), less);
    if (!ok) {
      res.holds = false;
      res.witness = input;
      break;
    }
  }
  return res;
}

PropertyResult check_functional(const lang::Program& p, PropertyId id,
                                const Suite& suite,
                                const interp::RunOptions& options) {
  PropertyResult res;
  const auto& entry = p.entry();
  int slot = array_param(entry);
  int key = key_param(entry);
  if (slot < 0 || entry.return_type.array || entry.return_type.is_void() ||
      (id == PropertyId::FindsKey && key < 0)) {
    res.applicable = false;
    res.note = "entry signature does not fit";
    return res;
  }
  interp::Interpreter in(p, options);
  res.holds = true;
  for (const auto& input : suite) {
    const auto& arr = input[static_cast<std::size_t>(slot)];
    if (!arr.a || arr.a->empty()) continue;
    const auto& xs = *arr.a;
    auto out = in.run(input);
    ++res.inputs_checked;
    bool ok = !out.fault && out.returned;
    if (ok) {
      const Value& r = *out.returned;
      auto lo = *std::min_element(xs.begin(), xs.end(), less);
      auto hi = *std::max_element(xs.begin(), xs.end(), less);
      switch (id) {
        case PropertyId::ReturnsMax:
          ok = interp::equal_modulo_width(r, hi);
          break;
        case PropertyId::ReturnsMin:
          ok = interp::equal_modulo_width(r, lo);
          break;
        case PropertyId::ReturnsRange: {
          auto d = interp::apply_binary(lang::BinaryOp::Sub, hi, lo, hi.type);
          ok = d && interp::equal_modulo_width(r, *d);
          break;
        }
        case PropertyId::FindsKey: {
          const Value& k = input[static_cast<std::size_t>(key)];
          auto same = [&](const Value& x) { return !less(x, k) && !less(k, x); };
          bool present = std::any_of(xs.begin(), xs.end(), same);
          std::int64_t idx = r.i;
          if (present) {
            ok = idx >= 0 && idx < static_cast<std::int64_t>(xs.size()) &&
                 same(xs[static_cast<std::size_t>(idx)]);
          } else {
            ok = idx == -1;
          }
          break;
        }
        default:
          break;
      }
    }
    if (!ok) {
      res.holds = false;
      res.witness = input;
      break;
    }
  }
  return res;
}

}  // namespace

std::string to_string(const PropertySpec& s) {
  switch (s.id) {
    case PropertyId::Complexity: return std::string("P1=") + to_string(s.target);
    case PropertyId::Sorted: return "P2";
    case PropertyId::BubbleInvariant: return "P3";
    case PropertyId::SelectionInvariant: return "P4";
    case PropertyId::ReturnsMax: return "returns-max";
    case PropertyId::ReturnsMin: return "returns-min";
    case PropertyId::ReturnsRange: return "returns-range";
    case PropertyId::FindsKey: return "finds-key";
  }
  return "?";
}

std::optional<PropertySpec> parse_property(std::string_view s) {
  if (s.rfind("P1=", 0) == 0) {
    auto c = parse_complexity(s.substr(3));
    if (!c) return std::nullopt;
    return complexity_is(*c);
  }
  for (auto id : {PropertyId::Sorted, PropertyId::BubbleInvariant,
                  PropertyId::SelectionInvariant, PropertyId::ReturnsMax,
                  PropertyId::ReturnsMin, PropertyId::ReturnsRange,
                  PropertyId::FindsKey}) {
    PropertySpec spec{id};
    if (s == to_string(spec)) return spec;
  }
  return std::nullopt;
}

PropertyResult check_property(const lang::Program& p, const PropertySpec& spec,
                              const Suite& suite, const PropertyOptions& options) {
  switch (spec.id) {
    case PropertyId::Complexity: {
      auto est = estimate_complexity(p, options.complexity);
      PropertyResult res;
      res.holds = est.cls == spec.target;
      res.note = std::string(to_string(est.cls)) + ", slope " + std::to_string(est.slope);
      if (est.timed_out) res.note += ", timed out";
      return res;
    }
    case PropertyId::Sorted:
      return check_sorted(p, suite, options.run);
    case PropertyId::BubbleInvariant:
      return check_loop_invariant(p, suite, sorted_suffix, options.run);
    case PropertyId::SelectionInvariant:
      return check_loop_invariant(p, suite, prefix_of_minima, options.run);
    default:
      return check_functional(p, spec.id, suite, options.run);
  }
}

bool check_sorted_postcondition(const lang::Program& p, const Suite& suite) {
  return check_property(p, kSorted, suite).holds;
}

std::optional<bool> check_bubble_invariant(const lang::Program& p,
                                           const Suite& suite) {
  auto r = check_property(p, kBubbleInvariant, suite);
  if (!r.applicable) return std::nullopt;
  return r.holds;
}

std::optional<bool> check_selection_invariant(const lang::Program& p,
                                              const Suite& suite) {
  auto r = check_property(p, kSelectionInvariant, suite);
  if (!r.applicable) return std::nullopt;
  return r.holds;
}

Suite permutation_suite(std::size_t max_len) {
  Suite out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    std::vector<int> xs(n);
    std::iota(xs.begin(), xs.end(), 1);
    do {
      out.push_back(array_suite({xs}).front());
    } while (std::next_permutation(xs.begin(), xs.end()));
  }
  return out;
}

Suite array_suite(const std::vector<std::vector<int>>& arrays) {
  Suite out;
  for (const auto& xs : arrays) {
    interp::Array a;
    for (int x : xs) a.push_back(Value::of_int(x));
    out.push_back({Value::of_array(lang::Scalar::Int, std::move(a))});
  }
  return out;
}

}  // namespace coset::oracle
