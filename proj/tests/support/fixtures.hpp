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
/// Small helpers for building inputs and programs in tests.

#pragma once

#include <string_view>
#include <vector>

#include "coset/interp/value.hpp"
#include "coset/lang/parser.hpp"
#include "coset/oracle/differential.hpp"

namespace coset::testing {

inline interp::Value ints(const std::vector<int>& xs) {
  interp::Array a;
  for (int x : xs) a.push_back(interp::Value::of_int(x));
  return interp::Value::of_array(lang::Scalar::Int, std::move(a));
}

inline std::vector<int> as_ints(const interp::Value& v) {
  std::vector<int> out;
  for (const auto& x : *v.a) out.push_back(static_cast<int>(x.i));
  return out;
}

inline lang::Program parse(std::string_view src) { return lang::parse_checked(src); }

/// Every array of length 0..max_len over the values -2..2.
inline oracle::Suite small_arrays(int max_len) {
  oracle::Suite out;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    out.push_back({ints(cur)});
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = -2; v <= 2; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline constexpr std::string_view kBubble = R"(int Bubble(int[] a) {
    int n = Length(a);
    for (int i = 0; i < n - 1; i += 1) {
        for (int j = 0; j < n - i - 1; j += 1) {
            if (a[j] > a[j + 1]) {
                int t = a[j];
                a[j] = a[j + 1];
                a[j + 1] = t;
            }
        }
    }
    return 0;
}
)";

inline constexpr std::string_view kInsertion = R"(int Insertion(int[] a) {
    int n = Length(a);
    for (int i = 1; i < n; i += 1) {
        int k = a[i];
        int j = i - 1;
        while (j >= 0 && a[j] > k) {
            a[j + 1] = a[j];
            j -= 1;
        }
        a[j + 1] = k;
    }
    return 0;
}
)";

inline constexpr std::string_view kSelection = R"(int Selection(int[] a) {
    int n = Length(a);
    for (int i = 0; i < n - 1; i += 1) {
        int m = i;
        for (int j = i + 1; j < n; j += 1) {
            if (a[j] < a[m]) {
                m = j;
            }
        }
        int t = a[i];
        a[i] = a[m];
        a[m] = t;
    }
    return 0;
}
)";

inline constexpr std::string_view kMaxScan = R"(int Largest(int[] a) {
    int m = a[0];
    for (int i = 1; i < Length(a); i += 1) {
        if (a[i] > m) {
            m = a[i];
        }
    }
    return m;
}
)";

}  // namespace coset::testing
