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

#include "coset/interp/trace.hpp"

#include "coset/lang/printer.hpp"

namespace coset::interp {

namespace {

class Recorder : public ExecutionObserver {
 public:
  explicit Recorder(Trace& t) : t_(t) {}
  void on_write(int slot, const Value& v) override {
    t_.snapshots.push_back({t_.snapshots.size(), slot, v.deep_copy()});
  }

 private:
  Trace& t_;
};

}  // namespace

std::map<int, Value> Trace::state_at(std::size_t k) const {
  std::map<int, Value> state;
  for (std::size_t n = 0; n < k && n < snapshots.size(); ++n)
    state[snapshots[n].slot] = snapshots[n].value;
  return state;
}

Trace Trace::data_projection() const {
  Trace out;
  std::map<int, int> renumber;
  for (const auto& s : snapshots) {
    if (s.value.type == Type::scalar(Scalar::Bool)) continue;
    auto [it, fresh] =
        renumber.try_emplace(s.slot, static_cast<int>(renumber.size()));
    out.snapshots.push_back({out.snapshots.size(), it->second, s.value});
  }
  return out;
}

TracedRun trace(const Interpreter& interp, std::span<const Value> args) {
  TracedRun r;
  Recorder rec(r.trace);
  r.outcome = interp.run(args, &rec);
  r.trace.step_total = r.outcome.steps;
  return r;
}

TracedRun trace(const lang::Program& p, std::span<const Value> args,
                RunOptions options) {
  return trace(Interpreter(p, options), args);
}

std::string serialize(const Trace& t) {
  std::string out = "# coset-trace v1 steps=" + std::to_string(t.step_total) + "\n";
  for (const auto& s : t.snapshots) {
    out += std::to_string(s.index);
    out += ',';
    out += std::to_string(s.slot);
    out += ',';
    out += to_string(s.value);
    out += '\n';
  }
  return out;
}

std::size_t normalized_size(const lang::Program& p) {
  return lang::loc_count(p) * kBytesPerLine;
}

std::size_t normalized_size(const Trace& t) {
  return t.snapshots.size() * kBytesPerStateChange;
}

}  // namespace coset::interp
