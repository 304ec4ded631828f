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
/// Corpus manifests: splits, relabelling and the on-disk layout
///
///     <dir>/manifest.json
///     <dir>/<task>/<label>/<id>.ml
///
/// The manifest (schema "coset-manifest/1") holds every entry field except
/// the source text. Inputs are stored as JSON arrays of argument values and
/// converted to the entry's parameter types on load.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "coset/corpus/catalog.hpp"

namespace coset::corpus {

inline constexpr const char* kManifestSchema = "coset-manifest/1";

struct Manifest {
  std::vector<CorpusEntry> entries;
  std::array<double, 3> ratios{0.76, 0.12, 0.12};  // train, valid, test
  std::uint64_t split_seed = 0;
  std::map<std::string, std::uint64_t> generator_seeds;

  std::vector<const CorpusEntry*> select(Split s) const;
  const CorpusEntry* find(std::string_view id) const;
};

/// Stratified by label: each label's entries are shuffled with `seed` and
/// cut by `ratios`. Throws std::invalid_argument unless the ratios are
/// non-negative and sum to 1.
Manifest split(std::vector<CorpusEntry> entries, std::array<double, 3> ratios,
               std::uint64_t seed);

/// Binary relabelling by one property: entries whose task admits `spec`
/// and whose program satisfies it get `positive_label(spec)`, all others
/// `negative_label(spec)`.
Manifest relabel_by_property(const Manifest& m, const oracle::PropertySpec& spec);
std::string positive_label(const oracle::PropertySpec& spec);
std::string negative_label(const oracle::PropertySpec& spec);

void save(const Manifest& m, const std::filesystem::path& dir);
/// Accepts the corpus directory or the manifest file. Throws
/// std::runtime_error on missing files or schema mismatch.
Manifest load(const std::filesystem::path& path);

}  // namespace coset::corpus
