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

#include "coset/oracle/differential.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coset/transforms/transforms.hpp"

namespace coset::oracle {

namespace {

class GuardObserver : public interp::ExecutionObserver {
 public:
  explicit GuardObserver(std::set<lang::NodeId> returns)
      : returns_(std::move(returns)) {}
  void on_statement(const lang::Stmt& s, int depth) override {
    if (depth == 1 && returns_.count(s.id)) hit = true;
  }
  bool hit = false;

 private:
  std::set<lang::NodeId> returns_;
};

std::set<lang::NodeId> guard_returns(const lang::Program& p) {
  std::set<lang::NodeId> ids;
  for (const auto* g : transforms::leading_guards(p)) ids.insert(g->body[0].id);
  return ids;
}

bool triggers(const interp::Interpreter& in, const std::set<lang::NodeId>& ids,
              const Input& input) {
  if (ids.empty()) return false;
  GuardObserver obs(ids);
  in.run(input, &obs);
  return obs.hit;
}

bool compare(Mode mode, const interp::Outcome& a, const interp::Outcome& b) {
  return mode == Mode::Approximating ? interp::equal_modulo_width(a, b) : a == b;
}

}  // namespace

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Exact: return "exact";
    case Mode::Approximating: return "approximating";
    case Mode::ExpectDivergence: return "expect-divergence";
  }
  return "?";
}

std::size_t EquivalenceVerdict::divergences() const {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const InputResult& r) { return !r.equal; }));
}

std::size_t EquivalenceVerdict::flagged() const {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const InputResult& r) { return r.flagged; }));
}

void decide(EquivalenceVerdict& v) {
  v.witness.reset();
  bool pass = true;
  bool diverged = false;
  for (std::size_t k = 0; k < v.results.size(); ++k) {
    const auto& r = v.results[k];
    switch (v.mode) {
      case Mode::Exact:
        if (!r.equal) {
          pass = false;
          if (!v.witness) v.witness = k;
        }
        break;
      case Mode::Approximating:
        if (!r.equal && !v.witness) v.witness = k;
        if (!r.equal && !r.flagged) pass = false;
        break;
      case Mode::ExpectDivergence:
        if (!r.equal && r.guard) {
          diverged = true;
          if (!v.witness) v.witness = k;
        }
        if (!r.equal && !r.guard) pass = false;
        break;
    }
  }
  if (v.mode == Mode::ExpectDivergence) pass = pass && diverged;
  v.pass = pass;
}

EquivalenceVerdict differential_check(const lang::Program& original,
                                      const lang::Program& transformed,
                                      const Suite& inputs, Mode mode,
                                      const interp::RunOptions& options) {
  if (inputs.empty()) throw std::invalid_argument("differential_check: no inputs");
  if (original.entry().params.size() != transformed.entry().params.size())
    throw std::invalid_argument("differential_check: entry signatures differ");
  interp::Interpreter a(original, options);
  interp::Interpreter b(transformed, options);
  std::set<lang::NodeId> guards;
  if (mode == Mode::ExpectDivergence) guards = guard_returns(original);

  EquivalenceVerdict v;
  v.mode = mode;
  v.results.reserve(inputs.size());
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    InputResult r;
    r.input = k;
    r.original = a.run(inputs[k]);
    r.transformed = b.run(inputs[k]);
    r.equal = compare(mode, r.original, r.transformed);
    if (mode == Mode::Approximating && !r.equal)
      r.flagged = r.original.width_events > 0 || r.transformed.width_events > 0;
    if (mode == Mode::ExpectDivergence) r.guard = triggers(a, guards, inputs[k]);
    v.results.push_back(std::move(r));
  }
  decide(v);
  return v;
}

bool triggers_guard(const lang::Program& p, const Input& input,
                    const interp::RunOptions& options) {
  interp::Interpreter in(p, options);
  return triggers(in, guard_returns(p), input);
}

std::optional<std::size_t> find_witness(const lang::Program& original,
                                        const lang::Program& transformed,
                                        const Suite& candidates, Mode mode,
                                        const interp::RunOptions& options) {
  interp::Interpreter a(original, options);
  interp::Interpreter b(transformed, options);
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (!compare(mode, a.run(candidates[k]), b.run(candidates[k]))) return k;
  return std::nullopt;
}

std::string describe(const EquivalenceVerdict& v) {
  std::string out = std::string(to_string(v.mode)) + ": " +
                    std::to_string(v.divergences()) + "/" +
                    std::to_string(v.results.size()) + " divergent";
  if (v.mode == Mode::Approximating)
    out += ", " + std::to_string(v.flagged()) + " flagged";
  out += v.pass ? ", pass" : ", FAIL";
  if (v.witness) {
    const auto& r = v.results[*v.witness];
    out += "; witness #" + std::to_string(r.input) + ": " +
           interp::describe(r.original) + " vs " + interp::describe(r.transformed);
  }
  return out;
}

}  // namespace coset::oracle
