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

#include "coset/corpus/generator.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <stdexcept>

#include "coset/lang/parser.hpp"
#include "coset/lang/printer.hpp"

namespace coset::corpus {

namespace {

using Pool = std::vector<const char*>;

// Name pools per role. Pools are disjoint so a draw never collides.
const Pool kArr{"a", "arr", "nums", "data", "values", "xs", "items", "list", "input", "elems"};
const Pool kLen{"n", "len", "size", "count", "total", "length"};
const Pool kOuter{"i", "x", "row", "p", "u", "outer", "idx", "pos"};
const Pool kInner{"j", "y", "col", "q", "w", "inner", "jdx", "cur"};
const Pool kTmp{"t", "tmp", "temp", "hold", "aux", "spare"};
const Pool kTmp2{"t2", "tmp2", "other", "second", "aux2"};
const Pool kCounter{"swaps", "ops", "moves", "steps", "work", "ticks", "passes"};
const Pool kStep{"step", "stride", "inc", "delta"};
const Pool kKey{"key", "target", "needle", "wanted", "goal", "probe"};
const Pool kBest{"m", "best", "result", "ext", "top", "pick", "champ"};
const Pool kLo{"lo", "left", "low", "start", "from"};
const Pool kHi{"hi", "right", "high", "end", "to"};
const Pool kMid{"mid", "middle", "half", "center", "pivot"};
const Pool kFlag{"found", "done", "stop", "finished", "located"};
const Pool kCmp{"c", "cmp", "sign", "order", "dir"};

const Pool& function_pool(std::string_view task) {
  static const Pool kSorting{"SortValues", "SortArray", "Arrange", "OrderValues", "SortInPlace"};
  static const Pool kDifference{"Difference", "Spread", "Range", "MaxDiff", "Gap"};
  static const Pool kSearch{"Find", "Search", "IndexOf", "Locate", "Lookup"};
  static const Pool kAggregate{"Extreme", "Scan", "Pick", "Choose", "Best"};
  if (task == "sorting") return kSorting;
  if (task == "difference") return kDifference;
  if (task == "search") return kSearch;
  return kAggregate;
}

struct Names {
  std::string fn, a, n, i, j, t, t2, c, s, k, m, lo, hi, mid, f, cmp;
};

struct Style {
  bool while_outer = false;
  bool while_inner = false;
  bool inline_length = false;
  bool guard = false;
  int dispatch = 0;  // 0 none, 1 if, 2 switch
  bool log_after = false;
  bool nested_check = false;
  bool two_temps = false;
  bool const_step = false;
  bool element_at = false;
  bool flipped_compare = false;
  bool dead_counter = false;
  int variant = 0;
};

int variant_count(std::string_view label) {
  if (label == "Bubblesort" || label == "LinearSearch" || label == "BinarySearch") return 3;
  return 2;
}

class Writer {
 public:
  Writer(std::string_view task, std::string_view label, const Names& nm, const Style& st)
      : task_(task), label_(label), n_(nm), s_(st) {}

  std::string program() {
    const bool search = task_ == "search";
    out_ += "int " + n_.fn + "(int[] " + n_.a + (search ? ", int " + n_.k : "") + ") {\n";
    if (s_.guard)
      out_ += "if (Length(" + n_.a + ") == 0) { return " + (search ? "-2" : "-1") + "; }\n";
    if (!s_.inline_length) out_ += "int " + n_.n + " = Length(" + n_.a + ");\n";
    dispatch();
    const std::string log = "Print(" + len() + ");\n";
    const std::string counter = "int " + n_.c + " = 0;\n";
    out_ += s_.log_after ? counter + log : log + counter;
    if (s_.const_step) out_ += "int " + n_.s + " = 1;\n";
    body();
    out_ += "}\n";
    return out_;
  }

 private:
  std::string len() const { return s_.inline_length ? "Length(" + n_.a + ")" : n_.n; }
  std::string at(const std::string& idx) const {
    return s_.element_at ? "ElementAt(" + n_.a + ", " + idx + ")" : n_.a + "[" + idx + "]";
  }
  std::string cell(const std::string& idx) const { return n_.a + "[" + idx + "]"; }
  std::string greater(const std::string& x, const std::string& y) const {
    return s_.flipped_compare ? y + " < " + x : x + " > " + y;
  }
  std::string less(const std::string& x, const std::string& y) const { return greater(y, x); }
  std::string up(const std::string& v) const {
    return v + " += " + (s_.const_step ? n_.s : "1") + ";\n";
  }
  std::string tick() const { return n_.c + " += 1;\n"; }

  std::string swap(const std::string& x, const std::string& y) const {
    if (s_.two_temps)
      return "int " + n_.t + " = " + cell(x) + ";\nint " + n_.t2 + " = " + cell(y) + ";\n" +
             cell(x) + " = " + n_.t2 + ";\n" + cell(y) + " = " + n_.t + ";\n";
    return "int " + n_.t + " = " + cell(x) + ";\n" + cell(x) + " = " + cell(y) + ";\n" +
           cell(y) + " = " + n_.t + ";\n";
  }

  // A counted loop in for or while form.
  std::string loop(bool as_while, const std::string& v, const std::string& init,
                   const std::string& cond, const std::string& step,
                   const std::string& inner) const {
    if (as_while)
      return "int " + v + " = " + init + ";\nwhile (" + cond + ") {\n" + inner + step + "}\n";
    std::string st = step;
    while (!st.empty() && (st.back() == '\n' || st.back() == ';')) st.pop_back();
    return "for (int " + v + " = " + init + "; " + cond + "; " + st + ") {\n" + inner + "}\n";
  }

  // `if (cond) { then }`, split into a nested pair when the style asks.
  std::string checked(const std::string& bound, const std::string& cond,
                      const std::string& then) const {
    if (s_.nested_check)
      return "if (" + bound + ") {\nif (" + cond + ") {\n" + then + "}\n}\n";
    return "if (" + cond + ") {\n" + then + "}\n";
  }

  void dispatch() {
    if (s_.dispatch == 0 || s_.inline_length) return;
    std::string value = "1", result = "0";
    if (task_ == "search") value = "0", result = "-1";
    if (task_ == "aggregate") result = n_.a + "[0]";
    if (s_.dispatch == 1)
      out_ += "if (" + n_.n + " == " + value + ") { return " + result + "; }\n";
    else
      out_ += "switch (" + n_.n + ") {\ncase " + value + ": return " + result + ";\n}\n";
  }

  void finish(const std::string& ret) {
    if (!s_.dead_counter) out_ += "Print(" + n_.c + ");\n";
    out_ += "return " + ret + ";\n";
  }

  void body() {
    if (label_ == "Bubblesort") {
      bubble(s_.variant);
      finish("0");
    } else if (label_ == "Insertionsort") {
      insertion();
      finish("0");
    } else if (label_ == "Selectionsort") {
      selection(s_.variant);
      finish("0");
    } else if (label_ == "DifferenceBySort") {
      if (s_.variant == 0) bubble(0); else selection(0);
      const std::string last = s_.inline_length ? "Length(" + n_.a + ") - 1" : n_.n + " - 1";
      finish(cell(last) + " - " + cell("0"));
    } else if (label_ == "DifferenceByScan") {
      scan_range();
    } else if (label_ == "LinearSearch") {
      linear_search();
    } else if (label_ == "BinarySearch") {
      binary_search();
    } else {
      extreme(label_ == "MaxScan");
    }
  }

  void bubble(int variant) {
    const auto& i = n_.i;
    const auto& j = n_.j;
    std::string swap_body = swap(j, j + " + 1") + tick();
    if (variant == 1) swap_body += n_.f + " = true;\n";
    std::string test = checked(j + " + 1 < " + len(), greater(at(j), at(j + " + 1")), swap_body);
    if (variant == 2) {
      std::string inner = loop(s_.while_inner, j, "0", j + " < " + n_.hi, up(j), test);
      out_ += "int " + n_.hi + " = " + len() + " - 1;\nwhile (" + n_.hi + " > 0) {\n" + inner +
              n_.hi + " -= 1;\n}\n";
      return;
    }
    std::string inner =
        loop(s_.while_inner, j, "0", j + " < " + len() + " - " + i + " - 1", up(j), test);
    if (variant == 1)
      inner = "bool " + n_.f + " = false;\n" + inner + "if (!" + n_.f + ") { break; }\n";
    out_ += loop(s_.while_outer, i, "0", i + " < " + len() + " - 1", up(i), inner);
  }

  void insertion() {
    const auto& i = n_.i;
    const auto& j = n_.j;
    if (s_.variant == 0) {
      std::string shift = cell(j + " + 1") + " = " + cell(j) + ";\n" + j + " -= 1;\n" + tick();
      std::string inner = "int " + n_.t + " = " + cell(i) + ";\nint " + j + " = " + i +
                          " - 1;\nwhile (" + j + " >= 0 && " + greater(at(j), n_.t) +
                          ") {\n" + shift + "}\n" + cell(j + " + 1") + " = " + n_.t + ";\n";
      out_ += loop(s_.while_outer, i, "1", i + " < " + len(), up(i), inner);
      return;
    }
    std::string cond = j + " > 0 && " + greater(at(j + " - 1"), at(j));
    std::string inner =
        loop(s_.while_inner, j, i, cond, j + " -= 1;\n", swap(j + " - 1", j) + tick());
    out_ += loop(s_.while_outer, i, "1", i + " < " + len(), up(i), inner);
  }

  void selection(int variant) {
    const auto& i = n_.i;
    const auto& j = n_.j;
    const auto& m = n_.m;
    std::string test = checked(j + " < " + len(), less(at(j), at(m)), m + " = " + j + ";\n");
    std::string inner = "int " + m + " = " + i + ";\n" +
                        loop(s_.while_inner, j, i + " + 1", j + " < " + len(), up(j),
                             test + tick());
    if (variant == 1)
      inner += "if (" + m + " != " + i + ") {\n" + swap(i, m) + "}\n";
    else
      inner += swap(i, m);
    out_ += loop(s_.while_outer, i, "0", i + " < " + len() + " - 1", up(i), inner);
  }

  void scan_range() {
    const auto& i = n_.i;
    std::string first = "if (" + less(at(i), n_.lo) + ") {\n" + n_.lo + " = " + cell(i) + ";\n}\n";
    std::string second = "if (" + greater(at(i), n_.hi) + ") {\n" + n_.hi + " = " + cell(i) + ";\n}\n";
    std::string inner = s_.variant == 0
                            ? first + second
                            : first.substr(0, first.size() - 1) + " else {\n" + second + "}\n";
    out_ += "int " + n_.lo + " = " + cell("0") + ";\nint " + n_.hi + " = " + cell("0") + ";\n";
    out_ += loop(s_.while_outer, i, "1", i + " < " + len(), up(i), inner + tick());
    finish(n_.hi + " - " + n_.lo);
  }

  void linear_search() {
    const auto& i = n_.i;
    const auto& k = n_.k;
    if (s_.variant == 0) {
      std::string inner = tick() + "if (" + at(i) + " == " + k + ") { return " + i + "; }\n";
      out_ += loop(s_.while_outer, i, "0", i + " < " + len(), up(i), inner);
      finish("-1");
      return;
    }
    if (s_.variant == 1) {
      out_ += "bool " + n_.f + " = false;\nint " + i + " = 0;\nwhile (!" + n_.f + " && " + i +
              " < " + len() + ") {\n" + tick() + "if (" + at(i) + " == " + k + ") {\n" + n_.f +
              " = true;\n} else {\n" + up(i) + "}\n}\n";
    } else {
      out_ += "int " + i + " = 0;\nwhile (" + i + " < " + len() + " && " + at(i) + " != " + k +
              ") {\n" + tick() + up(i) + "}\n";
    }
    out_ += "if (" + i + " == " + len() + ") { return -1; }\n";
    finish(i);
  }

  void binary_search() {
    const auto& lo = n_.lo;
    const auto& hi = n_.hi;
    const auto& mid = n_.mid;
    const auto& k = n_.k;
    const std::string probe = at(mid);
    std::string head = "int " + mid + " = " +
                       (s_.two_temps ? "(" + lo + " + " + hi + ") / 2" :
                                       lo + " + (" + hi + " - " + lo + ") / 2") + ";\n" + tick();
    std::string narrow = "if (" + less(probe, k) + ") {\n" + lo + " = " + mid + " + 1;\n} else {\n" +
                         hi + " = " + mid + " - 1;\n}\n";
    out_ += "int " + lo + " = 0;\nint " + hi + " = " + len() + " - 1;\n";
    if (s_.variant == 0) {
      out_ += "while (" + lo + " <= " + hi + ") {\n" + head + "if (" + probe + " == " + k +
              ") { return " + mid + "; }\n" + narrow + "}\n";
      finish("-1");
    } else if (s_.variant == 1) {
      const auto& c = n_.cmp;
      out_ += "while (" + lo + " <= " + hi + ") {\n" + head + "int " + c + " = 0;\nif (" +
              less(probe, k) + ") { " + c + " = 1; }\nif (" + greater(probe, k) + ") { " + c +
              " = 2; }\nswitch (" + c + ") {\ncase 0: return " + mid + ";\ncase 1: " + lo +
              " = " + mid + " + 1;\ndefault: " + hi + " = " + mid + " - 1;\n}\n}\n";
      finish("-1");
    } else {
      out_ += "int " + n_.i + " = -1;\nbool " + n_.f + " = false;\nwhile (!" + n_.f + " && " + lo +
              " <= " + hi + ") {\n" + head + "if (" + probe + " == " + k + ") {\n" + n_.i +
              " = " + mid + ";\n" + n_.f + " = true;\n} else {\n" + narrow + "}\n}\n";
      finish(n_.i);
    }
  }

  void extreme(bool max) {
    const auto& i = n_.i;
    const auto& m = n_.m;
    auto better = [&](const std::string& x, const std::string& y) {
      return max ? greater(x, y) : less(x, y);
    };
    std::string inner, init, ret;
    if (s_.variant == 0) {
      init = cell("0");
      inner = checked(i + " < " + len(), better(at(i), m), m + " = " + cell(i) + ";\n");
      ret = m;
    } else {
      init = "0";
      inner = checked(i + " < " + len(), better(at(i), at(m)), m + " = " + i + ";\n");
      ret = cell(m);
    }
    out_ += "int " + m + " = " + init + ";\n";
    out_ += loop(s_.while_outer, i, "1", i + " < " + len(), up(i), tick() + inner);
    finish(ret);
  }

  std::string_view task_;
  std::string_view label_;
  const Names& n_;
  const Style& s_;
  std::string out_;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

template <typename Rng>
std::string draw(const Pool& pool, Rng& rng) {
  return pool[rng() % pool.size()];
}

template <typename Rng>
Names draw_names(std::string_view task, Rng& rng) {
  Names n;
  n.fn = draw(function_pool(task), rng);
  n.a = draw(kArr, rng);
  n.n = draw(kLen, rng);
  n.i = draw(kOuter, rng);
  n.j = draw(kInner, rng);
  n.t = draw(kTmp, rng);
  n.t2 = draw(kTmp2, rng);
  n.c = draw(kCounter, rng);
  n.s = draw(kStep, rng);
  n.k = draw(kKey, rng);
  n.m = draw(kBest, rng);
  n.lo = draw(kLo, rng);
  n.hi = draw(kHi, rng);
  n.mid = draw(kMid, rng);
  n.f = draw(kFlag, rng);
  n.cmp = draw(kCmp, rng);
  return n;
}

template <typename Rng>
Style draw_style(std::string_view label, Rng& rng) {
  auto coin = [&](int percent) { return static_cast<int>(rng() % 100) < percent; };
  Style s;
  s.while_outer = coin(30);
  s.while_inner = coin(30);
  s.inline_length = coin(20);
  s.guard = coin(50);
  s.dispatch = s.inline_length ? 0 : static_cast<int>(rng() % 3);
  s.log_after = coin(50);
  s.nested_check = coin(30);
  s.two_temps = coin(30);
  s.const_step = coin(25);
  s.element_at = coin(30);
  s.flipped_compare = coin(40);
  s.dead_counter = coin(30);
  s.variant = static_cast<int>(rng() % static_cast<unsigned>(variant_count(label)));
  return s;
}

bool uses_inner(std::string_view label) {
  return label == "Bubblesort" || label == "Insertionsort" || label == "Selectionsort" ||
         label == "DifferenceBySort";
}

// The renamed twin swaps two names that both occur in the program.
Names renamed(std::string_view label, const Style& st, Names n) {
  if (uses_inner(label))
    std::swap(n.i, n.j);
  else if (label == "BinarySearch")
    std::swap(n.lo, n.hi);
  else if (!st.inline_length)
    std::swap(n.i, n.n);
  else
    std::swap(n.a, n.i);
  return n;
}

const std::array<const char*, 3> kMembers{"base", "permuted", "renamed"};

std::string canonical(const std::string& text) {
  return lang::print(lang::parse_checked(text));
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string entry_id(std::string_view label, std::size_t k) {
  std::string num = std::to_string(k + 1);
  if (num.size() < 3) num.insert(0, 3 - num.size(), '0');
  return lower(label) + "-" + num;
}

}  // namespace

std::vector<CorpusEntry> generate(std::string_view task, std::string_view label,
                                  std::size_t count, std::uint64_t seed,
                                  const GenerateOptions& options) {
  const TaskDef* t = find_task(task);
  const LabelDef* def = find_label(label);
  if (!t || !def || def->task != task)
    throw std::invalid_argument("unknown task/label pair: " + std::string(task) + "/" +
                                std::string(label));
  std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(fnv1a(label)),
                   static_cast<std::uint32_t>(fnv1a(label) >> 32)};
  std::mt19937_64 rng(sq);
  const auto popts = property_options(*t);

  std::set<std::string> seen;
  std::vector<CorpusEntry> out;
  std::size_t family = 0;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > count * 50)
      throw std::runtime_error("cannot draw enough distinct programs for " + std::string(label));
    Names names = draw_names(task, rng);
    Style style = draw_style(label, rng);
    Style permuted = style;
    permuted.log_after = !style.log_after;
    std::array<std::string, 3> sources{
        canonical(Writer(task, label, names, style).program()),
        canonical(Writer(task, label, names, permuted).program()),
        canonical(Writer(task, label, renamed(label, style, names), style).program()),
    };
    if (std::any_of(sources.begin(), sources.end(),
                    [&](const std::string& s) { return seen.count(s) > 0; }))
      continue;
    for (std::size_t m = 0; m < sources.size() && out.size() < count; ++m) {
      CorpusEntry e;
      e.id = entry_id(label, out.size());
      e.task = std::string(task);
      e.label = std::string(label);
      e.family = lower(label) + "-f" + std::to_string(family);
      e.variant = kMembers[m];
      e.source = sources[m];
      e.inputs = input_suite(*t, rng());
      if (options.certify) {
        auto verdict = check_label(*def, e.program(), certification_suite(*t, e.inputs), popts);
        for (const auto& c : verdict.checks)
          if (!c.ok || c.result.note.find("timed out") != std::string::npos)
            throw std::runtime_error(e.id + " fails " + to_string(c.check) + " (" +
                                     c.result.note + ")\n" + e.source);
      }
      seen.insert(sources[m]);
      out.push_back(std::move(e));
    }
    ++family;
  }
  return out;
}

std::vector<CorpusEntry> generate_task(std::string_view task, std::size_t count,
                                       std::uint64_t seed, const GenerateOptions& options) {
  if (!task.empty() && !find_task(task))
    throw std::invalid_argument("unknown task: " + std::string(task));
  std::vector<CorpusEntry> out;
  for (const auto& def : labels()) {
    if (!task.empty() && def.task != task) continue;
    auto part = generate(def.task, def.label, count, seed, options);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace coset::corpus
