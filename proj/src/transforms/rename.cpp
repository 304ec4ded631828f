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

#include <functional>
#include <random>
#include <unordered_map>

#include "common.hpp"
#include "coset/lang/builtins.hpp"
#include "coset/lang/parser.hpp"

namespace coset::transforms {

using namespace detail;

namespace {

// Walks one function with block scoping and hands every binding (parameter
// or declaration) to `name_of`, which returns its new name.
class BindingRenamer {
 public:
  using NameFn = std::function<std::string(const std::string&, std::size_t)>;

  BindingRenamer(std::vector<Edit>& edits, NameFn name_of)
      : edits_(edits), name_of_(std::move(name_of)) {}

  void run(Function& f) {
    scopes_.assign(1, {});
    for (auto& prm : f.params) prm.name = bind(prm.name, prm.span, prm.id);
    list(f.body);
  }

  std::size_t bindings() const { return count_; }

 private:
  std::string bind(const std::string& old, const lang::Span& span, lang::NodeId id) {
    std::string fresh = name_of_(old, count_++);
    scopes_.back()[old] = fresh;
    if (fresh != old) edits_.push_back({span, id, "rename " + old + " -> " + fresh});
    return fresh;
  }

  void rename_uses(Expr& e) {
    if (e.kind == ExprKind::Var) {
      for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
        auto f = it->find(e.name);
        if (f != it->end()) {
          e.name = f->second;
          break;
        }
      }
    }
    for (auto& o : e.operands) rename_uses(o);
  }

  void list(std::vector<Stmt>& l) {
    scopes_.emplace_back();
    for (auto& s : l) stmt(s);
    scopes_.pop_back();
  }

  void stmt(Stmt& s) {
    switch (s.kind) {
      case StmtKind::VarDecl:
        if (s.expr) rename_uses(*s.expr);
        s.name = bind(s.name, s.span, s.id);
        break;
      case StmtKind::For:
        scopes_.emplace_back();
        for (auto& i : s.init) stmt(i);
        if (s.expr) rename_uses(*s.expr);
        for (auto& st : s.step) stmt(st);
        list(s.body);
        scopes_.pop_back();
        break;
      case StmtKind::Switch:
        rename_uses(*s.expr);
        for (auto& c : s.cases) list(c.body);
        if (s.default_body) list(*s.default_body);
        break;
      default:
        if (s.target) rename_uses(*s.target);
        if (s.expr) rename_uses(*s.expr);
        if (s.kind == StmtKind::Block || s.kind == StmtKind::If ||
            s.kind == StmtKind::While)
          list(s.body);
        if (s.has_else) list(s.else_body);
        break;
    }
  }

  std::vector<Edit>& edits_;
  NameFn name_of_;
  std::vector<std::unordered_map<std::string, std::string>> scopes_;
  std::size_t count_ = 0;
};

std::size_t count_bindings(const Function& f) {
  std::size_t n = f.params.size();
  lang::visit_stmts(f.body, [&](const Stmt& s) {
    if (s.kind == StmtKind::VarDecl) ++n;
  });
  return n;
}

bool selected(const Function& f, std::string_view function) {
  return function.empty() || f.name == function;
}

}  // namespace

TransformResult rename_variables(const Program& p, std::uint64_t seed) {
  Program out = p;
  std::vector<Edit> edits;
  std::mt19937_64 rng(seed);
  for (auto& f : out.functions) {
    std::size_t n = count_bindings(f);
    std::vector<std::string> pool;
    for (std::size_t k = 1; pool.size() < n; ++k) {
      std::string name = "v" + std::to_string(k);
      if (!out.find(name) && !lang::find_builtin(name)) pool.push_back(name);
    }
    // Fisher-Yates with an explicit draw so results do not depend on the
    // standard library's shuffle.
    for (std::size_t k = pool.size(); k > 1; --k)
      std::swap(pool[k - 1], pool[rng() % k]);
    BindingRenamer r(edits, [&](const std::string&, std::size_t index) {
      return pool[index];
    });
    r.run(f);
  }
  return finish(p, std::move(out), std::move(edits), {{"seed", std::to_string(seed)}});
}

TransformResult swap_variables(const Program& p, std::string_view a,
                               std::string_view b, std::string_view function) {
  Program out = p;
  std::vector<Edit> edits;
  const std::string sa(a), sb(b);
  for (auto& f : out.functions) {
    if (!selected(f, function)) continue;
    auto names = variable_names(f);
    if (sa == sb || !names.count(sa) || !names.count(sb)) continue;
    BindingRenamer r(edits, [&](const std::string& old, std::size_t) {
      return old == sa ? sb : old == sb ? sa : old;
    });
    r.run(f);
  }
  return finish(p, std::move(out), std::move(edits),
                {{"swap", sa + "," + sb}});
}

TransformResult rename_variable(const Program& p, std::string_view from,
                                std::string_view to, std::string_view function) {
  Program out = p;
  std::vector<Edit> edits;
  const std::string sf(from), st(to);
  if (lang::is_identifier(st) && !p.find(st) && !lang::find_builtin(st)) {
    for (auto& f : out.functions) {
      if (!selected(f, function)) continue;
      auto names = variable_names(f);
      if (!names.count(sf) || names.count(st)) continue;
      BindingRenamer r(edits, [&](const std::string& old, std::size_t) {
        return old == sf ? st : old;
      });
      r.run(f);
    }
  }
  return finish(p, std::move(out), std::move(edits), {{"rename", sf + "->" + st}});
}

}  // namespace coset::transforms
