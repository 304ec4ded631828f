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

#include "coset/corpus/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace coset::corpus {

namespace fs = std::filesystem;
using json = nlohmann::json;
using interp::Value;
using lang::Scalar;
using lang::Type;

namespace {

json to_json(const Value& v) {
  if (v.type.array) {
    json arr = json::array();
    if (v.a)
      for (const auto& x : *v.a) arr.push_back(to_json(x));
    return arr;
  }
  switch (v.type.base) {
    case Scalar::Float:
    case Scalar::Double: return v.f;
    case Scalar::Bool: return v.i != 0;
    case Scalar::String: return v.s ? *v.s : std::string();
    case Scalar::Char: return std::string(1, static_cast<char>(v.i));
    default: return v.i;
  }
}

Value from_json(const json& j, Type t) {
  if (t.array) {
    if (!j.is_array()) throw std::runtime_error("expected an array argument");
    interp::Array xs;
    for (const auto& x : j) xs.push_back(from_json(x, t.element()));
    return Value::of_array(t.base, std::move(xs));
  }
  switch (t.base) {
    case Scalar::Int: return Value::of_int(j.get<std::int32_t>());
    case Scalar::Long: return Value::of_long(j.get<std::int64_t>());
    case Scalar::Float: return Value::of_float(j.get<float>());
    case Scalar::Double: return Value::of_double(j.get<double>());
    case Scalar::Bool: return Value::of_bool(j.get<bool>());
    case Scalar::Char: {
      auto s = j.get<std::string>();
      if (s.size() != 1) throw std::runtime_error("expected a one-character string");
      return Value::of_char(s[0]);
    }
    case Scalar::String: return Value::of_string(j.get<std::string>());
    default: throw std::runtime_error("unsupported parameter type " + lang::to_string(t));
  }
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path entry_path(const CorpusEntry& e) { return fs::path(e.task) / e.label / (e.id + ".ml"); }

std::uint64_t label_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::vector<const CorpusEntry*> Manifest::select(Split s) const {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : entries)
    if (e.split == s) out.push_back(&e);
  return out;
}

const CorpusEntry* Manifest::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

Manifest split(std::vector<CorpusEntry> entries, std::array<double, 3> ratios,
               std::uint64_t seed) {
  double sum = 0;
  for (double r : ratios) {
    if (!(r >= 0)) throw std::invalid_argument("split ratios must be non-negative");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("split ratios must sum to 1");

  std::vector<std::string> order;
  for (const auto& e : entries)
    if (std::find(order.begin(), order.end(), e.label) == order.end()) order.push_back(e.label);
  for (const auto& label : order) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (entries[k].label == label) idx.push_back(k);
    const auto h = label_hash(label);
    std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    std::mt19937_64 rng(sq);
    std::shuffle(idx.begin(), idx.end(), rng);
    const auto n = static_cast<double>(idx.size());
    const auto train = static_cast<std::size_t>(std::llround(n * ratios[0]));
    const auto valid =
        std::min(idx.size() - train, static_cast<std::size_t>(std::llround(n * ratios[1])));
    for (std::size_t k = 0; k < idx.size(); ++k)
      entries[idx[k]].split = k < train ? Split::Train
                              : k < train + valid ? Split::Valid
                                                  : Split::Test;
  }
  Manifest m;
  m.entries = std::move(entries);
  m.ratios = ratios;
  m.split_seed = seed;
  return m;
}

std::string positive_label(const oracle::PropertySpec& spec) { return oracle::to_string(spec); }

std::string negative_label(const oracle::PropertySpec& spec) {
  return "not-" + oracle::to_string(spec);
}

Manifest relabel_by_property(const Manifest& m, const oracle::PropertySpec& spec) {
  Manifest out = m;
  for (auto& e : out.entries) {
    const TaskDef* task = find_task(e.task);
    bool holds = false;
    if (task && applies(*task, spec)) {
      auto r = oracle::check_property(e.program(), spec, certification_suite(*task, e.inputs),
                                      property_options(*task));
      holds = r.applicable && r.holds;
    }
    e.label = holds ? positive_label(spec) : negative_label(spec);
  }
  return out;
}

void save(const Manifest& m, const fs::path& dir) {
  fs::create_directories(dir);
  json doc;
  doc["schema"] = kManifestSchema;
  doc["ratios"] = m.ratios;
  doc["split_seed"] = m.split_seed;
  doc["generator_seeds"] = m.generator_seeds;
  json entries = json::array();
  for (const auto& e : m.entries) {
    const fs::path rel = entry_path(e);
    fs::create_directories(dir / rel.parent_path());
    std::ofstream src(dir / rel, std::ios::binary);
    src << e.source;
    if (!src) throw std::runtime_error("cannot write " + (dir / rel).string());
    json inputs = json::array();
    for (const auto& input : e.inputs) {
      json args = json::array();
      for (const auto& v : input) args.push_back(to_json(v));
      inputs.push_back(std::move(args));
    }
    entries.push_back({{"id", e.id},
                       {"task", e.task},
                       {"label", e.label},
                       {"family", e.family},
                       {"variant", e.variant},
                       {"split", to_string(e.split)},
                       {"path", rel.generic_string()},
                       {"inputs", std::move(inputs)}});
  }
  doc["entries"] = std::move(entries);
  std::ofstream out(dir / "manifest.json");
  out << doc.dump() << "\n";
  if (!out) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
}

Manifest load(const fs::path& path) {
  const fs::path file = fs::is_directory(path) ? path / "manifest.json" : path;
  const fs::path dir = file.parent_path();
  json doc;
  try {
    doc = json::parse(read_file(file));
  } catch (const json::parse_error& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
  if (doc.value("schema", "") != kManifestSchema)
    throw std::runtime_error(file.string() + ": expected schema " + kManifestSchema);
  Manifest m;
  try {
    m.ratios = doc.at("ratios").get<std::array<double, 3>>();
    m.split_seed = doc.at("split_seed").get<std::uint64_t>();
    m.generator_seeds = doc.value("generator_seeds", std::map<std::string, std::uint64_t>{});
    for (const auto& j : doc.at("entries")) {
      CorpusEntry e;
      e.id = j.at("id").get<std::string>();
      e.task = j.at("task").get<std::string>();
      e.label = j.at("label").get<std::string>();
      e.family = j.value("family", "");
      e.variant = j.value("variant", "");
      auto split = parse_split(j.at("split").get<std::string>());
      if (!split) throw std::runtime_error("entry " + e.id + ": bad split");
      e.split = *split;
      e.source = read_file(dir / j.at("path").get<std::string>());
      const auto program = e.program();
      const auto& params = program.entry().params;
      for (const auto& args : j.at("inputs")) {
        if (args.size() != params.size())
          throw std::runtime_error("entry " + e.id + ": input arity does not match");
        oracle::Input input;
        for (std::size_t k = 0; k < params.size(); ++k)
          input.push_back(from_json(args[k], params[k].type));
        e.inputs.push_back(std::move(input));
      }
      m.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
  return m;
}

}  // namespace coset::corpus
