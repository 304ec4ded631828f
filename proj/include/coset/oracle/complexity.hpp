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

/// \file
/// Empirical complexity estimation from interpreter step counts.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coset/interp/interpreter.hpp"
#include "coset/lang/ast.hpp"
#include "coset/oracle/differential.hpp"

namespace coset::oracle {

enum class ComplexityClass { Linear, Linearithmic, Quadratic, Other };

const char* to_string(ComplexityClass c);
std::optional<ComplexityClass> parse_complexity(std::string_view s);

/// Half-open slope ranges; the quadratic range is closed.
struct SlopeBins {
  double linear_lo = 0.8;
  double linearithmic_lo = 1.25;
  double quadratic_lo = 1.7;
  double quadratic_hi = 2.3;

  ComplexityClass classify(double slope) const;
};

/// Builds an argument vector of size `n` for the entry function.
using InputMaker =
    std::function<Input(const lang::Function& entry, std::size_t n,
                        std::mt19937_64& rng)>;

/// Fills the first array parameter with `n` values drawn from [0, 1000)
/// and every integral scalar parameter with -1.
Input random_array_input(const lang::Function& entry, std::size_t n,
                         std::mt19937_64& rng);

struct ComplexityOptions {
  std::vector<std::size_t> sizes{8, 16, 32, 64, 128};
  int trials = 3;
  std::uint64_t seed = 1;
  SlopeBins bins;
  InputMaker make_input = random_array_input;
  interp::RunOptions run;
};

struct ComplexityEstimate {
  ComplexityClass cls = ComplexityClass::Other;
  double slope = 0.0;
  std::vector<std::size_t> sizes;
  std::vector<double> mean_steps;
  bool timed_out = false;
};

/// Least-squares slope of log(mean steps) over log(n). A timeout at any
/// size gives OTHER.
ComplexityEstimate estimate_complexity(const lang::Program& p,
                                       const ComplexityOptions& options = {});

}  // namespace coset::oracle
