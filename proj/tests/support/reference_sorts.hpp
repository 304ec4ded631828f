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
/// Plain C++ sorts with a hook after every outer iteration, and
/// brute-force evaluation of the sorting properties over permutations.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace coset::testing {

// Reference sorts in C++. `after` sees the array after every completed
// iteration of the outer loop, with the number of completed iterations.
using SortHook = std::function<void(const std::vector<int>&, std::size_t)>;

inline void ref_bubble(std::vector<int>& a, const SortHook& after) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - i - 1; ++j)
      if (a[j] > a[j + 1]) std::swap(a[j], a[j + 1]);
    after(a, static_cast<std::size_t>(i + 1));
  }
}

inline void ref_insertion(std::vector<int>& a, const SortHook& after) {
  int n = static_cast<int>(a.size());
  for (int i = 1; i < n; ++i) {
    int k = a[i];
    int j = i - 1;
    while (j >= 0 && a[j] > k) {
      a[j + 1] = a[j];
      --j;
    }
    a[j + 1] = k;
    after(a, static_cast<std::size_t>(i));
  }
}

inline void ref_selection(std::vector<int>& a, const SortHook& after) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n - 1; ++i) {
    int m = i;
    for (int j = i + 1; j < n; ++j)
      if (a[j] < a[m]) m = j;
    std::swap(a[i], a[m]);
    after(a, static_cast<std::size_t>(i + 1));
  }
}

inline bool ref_suffix(const std::vector<int>& a, std::size_t i) {
  std::size_t len = a.size();
  for (std::size_t j = (i >= len ? 1 : std::max<std::size_t>(1, len - i)); j < len; ++j)
    if (a[j - 1] > a[j]) return false;
  return true;
}

inline bool ref_minima(const std::vector<int>& a, const std::vector<int>& sorted, std::size_t i) {
  for (std::size_t k = 0; k < std::min(i, a.size()); ++k)
    if (a[k] != sorted[k]) return false;
  return true;
}

struct Reference {
  bool sorted = true;
  bool suffix = true;
  bool minima = true;
};

inline Reference brute_force(void (*sort)(std::vector<int>&, const SortHook&), std::size_t max_len) {
  Reference r;
  for (std::size_t n = 0; n <= max_len; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<int> a = perm;
      sort(a, [&](const std::vector<int>& cur, std::size_t i) {
        r.suffix = r.suffix && ref_suffix(cur, i);
        std::vector<int> s = perm;
        std::sort(s.begin(), s.end());
        r.minima = r.minima && ref_minima(cur, s, i);
      });
      r.sorted = r.sorted && std::is_sorted(a.begin(), a.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return r;
}

}  // namespace coset::testing
