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

#include "coset/debugger/edits.hpp"

#include <algorithm>
#include <set>

#include "coset/lang/sema.hpp"

namespace coset::debugger {

using lang::Program;
using lang::Stmt;
using lang::StmtKind;
using transforms::Contract;
using transforms::TypeMode;

namespace {

struct Binding {
  std::string name;
  lang::Type type;
  lang::Span span;
};

std::vector<Binding> bindings(const lang::Function& f) {
  std::vector<Binding> out;
  std::set<std::string> seen;
  for (const auto& prm : f.params)
    if (seen.insert(prm.name).second) out.push_back({prm.name, prm.type, prm.span});
  lang::visit_stmts(f.body, [&](const Stmt& s) {
    if (s.kind == StmtKind::VarDecl && seen.insert(s.name).second)
      out.push_back({s.name, s.decl_type, s.span});
  });
  return out;
}

std::optional<TypeMode> mode_for(lang::Type t) {
  switch (t.base) {
    case lang::Scalar::Int: return TypeMode::IntToLong;
    case lang::Scalar::Long: return TypeMode::LongToInt;
    case lang::Scalar::Float: return TypeMode::FloatToDouble;
    case lang::Scalar::Double: return TypeMode::DoubleToFloat;
    default: return std::nullopt;
  }
}

AtomicEdit name_edit(EditKind kind, lang::Span span, std::string first, std::string second) {
  AtomicEdit e;
  e.kind = kind;
  e.site = span;
  e.first = std::move(first);
  e.second = std::move(second);
  return e;
}

AtomicEdit site_edit(EditKind kind, Contract contract, lang::Span span, lang::NodeId node,
                     TypeMode mode = TypeMode::IntToLong) {
  AtomicEdit e;
  e.kind = kind;
  e.contract = contract;
  e.site = span;
  e.node = node;
  e.type_mode = mode;
  return e;
}

bool is_name_edit(EditKind k) { return k == EditKind::Swap || k == EditKind::Rename; }

transforms::TransformResult apply_one(const Program& p, const AtomicEdit& e) {
  const std::string& fn = p.entry().name;
  switch (e.kind) {
    case EditKind::Swap: return transforms::swap_variables(p, e.first, e.second, fn);
    case EditKind::Rename: return transforms::rename_variable(p, e.first, e.second, fn);
    case EditKind::TypeSwap: return transforms::approximate_types(p, e.type_mode, e.node);
    case EditKind::ApiSwap: return transforms::substitute_api(p, e.node);
    case EditKind::SwitchToIf:
      return transforms::unify_control_statements(p, transforms::CsuDirection::SwitchToIf,
                                                  e.node);
    case EditKind::GuardRemoval: return transforms::strip_error_handling(p, e.node);
  }
  return {};
}

}  // namespace

const char* to_string(EditKind k) {
  switch (k) {
    case EditKind::Swap: return "swap";
    case EditKind::Rename: return "rename";
    case EditKind::TypeSwap: return "type-swap";
    case EditKind::ApiSwap: return "api-swap";
    case EditKind::SwitchToIf: return "switch-to-if";
    case EditKind::GuardRemoval: return "guard-removal";
  }
  return "?";
}

std::string AtomicEdit::describe() const {
  const std::string at = " at line " + std::to_string(site.line);
  switch (kind) {
    case EditKind::Swap: return "swap names " + first + " and " + second;
    case EditKind::Rename: return "rename " + first + " to " + second;
    case EditKind::TypeSwap: return std::string(transforms::to_string(type_mode)) + at;
    case EditKind::ApiSwap: return "substitute API call" + at;
    case EditKind::SwitchToIf: return "switch to if-else" + at;
    case EditKind::GuardRemoval: return "remove guard clause" + at;
  }
  return "?";
}

bool conflicts(const AtomicEdit& a, const AtomicEdit& b) {
  if (is_name_edit(a.kind) != is_name_edit(b.kind)) return false;
  if (is_name_edit(a.kind)) {
    std::set<std::string> names{a.first, a.second};
    return names.count(b.first) > 0 || names.count(b.second) > 0;
  }
  return a.site.overlaps(b.site) || a.node == b.node;
}

std::vector<AtomicEdit> edit_universe(const Program& p, const UniverseOptions& options) {
  std::vector<AtomicEdit> out;
  if (p.functions.empty()) return out;
  const auto& f = p.entry();
  const auto vars = bindings(f);
  auto keep = [&](AtomicEdit e) {
    if (apply_one(p, e).applicable) out.push_back(std::move(e));
  };

  for (std::size_t x = 0; x < vars.size(); ++x)
    for (std::size_t y = x + 1; y < vars.size(); ++y)
      if (vars[x].type == vars[y].type)
        keep(name_edit(EditKind::Swap, vars[x].span, vars[x].name, vars[y].name));

  std::set<std::string> taken;
  for (const auto& g : p.functions) {
    taken.insert(g.name);
    for (const auto& b : bindings(g)) taken.insert(b.name);
  }
  int next = 1;
  for (const auto& v : vars) {
    std::string fresh;
    do fresh = "v" + std::to_string(next++);
    while (taken.count(fresh));
    keep(name_edit(EditKind::Rename, v.span, v.name, fresh));
  }

  std::vector<AtomicEdit> sites;
  for (const auto& prm : f.params)
    if (auto m = mode_for(prm.type))
      sites.push_back(site_edit(EditKind::TypeSwap, Contract::Approximating, prm.span, prm.id, *m));
  lang::visit_stmts(f.body, [&](const Stmt& s) {
    if (s.kind == StmtKind::VarDecl)
      if (auto m = mode_for(s.decl_type))
        sites.push_back(site_edit(EditKind::TypeSwap, Contract::Approximating, s.span, s.id, *m));
  });
  for (const auto& g : p.functions)
    lang::visit_stmts(g.body, [&](const Stmt& s) {
      lang::visit_own_exprs(s, [&](const lang::Expr& e) {
        if (e.kind == lang::ExprKind::Call && (e.name == "Sort" || e.name == "ElementAt"))
          sites.push_back(site_edit(EditKind::ApiSwap, Contract::Approximating, e.span, e.id));
      });
      if (s.kind == StmtKind::Switch)
        sites.push_back(site_edit(EditKind::SwitchToIf, Contract::Preserving, s.span, s.id));
    });
  if (options.guard_probe)
    for (const auto* g : transforms::leading_guards(p))
      sites.push_back(site_edit(EditKind::GuardRemoval, Contract::Changing, g->span, g->id));
  std::stable_sort(sites.begin(), sites.end(), [](const AtomicEdit& a, const AtomicEdit& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.site.offset < b.site.offset;
  });
  for (auto& e : sites) keep(std::move(e));
  return out;
}

std::optional<Program> apply_edits(const Program& p, const std::vector<AtomicEdit>& edits) {
  for (std::size_t x = 0; x < edits.size(); ++x)
    for (std::size_t y = x + 1; y < edits.size(); ++y)
      if (conflicts(edits[x], edits[y])) return std::nullopt;
  std::vector<const AtomicEdit*> order;
  for (const auto& e : edits) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(), [](const AtomicEdit* a, const AtomicEdit* b) {
    return a->site.offset < b->site.offset;
  });
  Program cur = p;
  for (const auto* e : order) {
    auto r = apply_one(cur, *e);
    if (!r.applicable) return std::nullopt;
    cur = std::move(r.program);
  }
  for (const auto& d : lang::validate(cur))
    if (d.severity == lang::Severity::Error) return std::nullopt;
  return cur;
}

}  // namespace coset::debugger
