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

#include "coset/oracle/complexity.hpp"

#include <algorithm>
#include <cmath>

namespace coset::oracle {

using interp::Value;
using lang::Scalar;

const char* to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::Linear: return "LINEAR";
    case ComplexityClass::Linearithmic: return "LINEARITHMIC";
    case ComplexityClass::Quadratic: return "QUADRATIC";
    case ComplexityClass::Other: return "OTHER";
  }
  return "?";
}

std::optional<ComplexityClass> parse_complexity(std::string_view s) {
  for (auto c : {ComplexityClass::Linear, ComplexityClass::Linearithmic,
                 ComplexityClass::Quadratic, ComplexityClass::Other})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

ComplexityClass SlopeBins::classify(double slope) const {
  if (slope >= linear_lo && slope < linearithmic_lo) return ComplexityClass::Linear;
  if (slope >= linearithmic_lo && slope < quadratic_lo)
    return ComplexityClass::Linearithmic;
  if (slope >= quadratic_lo && slope <= quadratic_hi) return ComplexityClass::Quadratic;
  return ComplexityClass::Other;
}

Input random_array_input(const lang::Function& entry, std::size_t n,
                         std::mt19937_64& rng) {
  Input in;
  bool filled = false;
  for (const auto& prm : entry.params) {
    if (prm.type.array && !filled) {
      interp::Array xs;
      xs.reserve(n);
      for (std::size_t k = 0; k < n; ++k)
        xs.push_back(interp::convert(Value::of_long(static_cast<std::int64_t>(rng() % 1000)),
                                     prm.type.element()));
      in.push_back(Value::of_array(prm.type.base, std::move(xs)));
      filled = true;
    } else {
      in.push_back(interp::convert(Value::of_long(-1), prm.type));
    }
  }
  return in;
}

ComplexityEstimate estimate_complexity(const lang::Program& p,
                                       const ComplexityOptions& options) {
  interp::Interpreter in(p, options.run);
  ComplexityEstimate est;
  est.sizes = options.sizes;
  for (std::size_t n : options.sizes) {
    double total = 0;
    for (int t = 0; t < options.trials; ++t) {
      std::seed_seq seq{options.seed, static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(t)};
      std::mt19937_64 rng(seq);
      auto out = in.run(options.make_input(p.entry(), n, rng));
      if (out.fault && out.fault->kind == interp::FaultKind::Timeout)
        est.timed_out = true;
      total += static_cast<double>(out.steps);
    }
    est.mean_steps.push_back(total / std::max(1, options.trials));
  }
  if (est.timed_out || est.sizes.size() < 2) {
    est.cls = ComplexityClass::Other;
    return est;
  }
  const double m = static_cast<double>(est.sizes.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < est.sizes.size(); ++k) {
    double x = std::log(static_cast<double>(est.sizes[k]));
    double y = std::log(std::max(1.0, est.mean_steps[k]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = m * sxx - sx * sx;
  est.slope = denom == 0 ? 0.0 : (m * sxy - sx * sy) / denom;
  est.cls = options.bins.classify(est.slope);
  return est;
}

}  // namespace coset::oracle
