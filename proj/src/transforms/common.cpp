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

#include "common.hpp"

#include "coset/lang/builtins.hpp"
#include "coset/lang/sema.hpp"

namespace coset::transforms::detail {

Program prepare(const Program& p) {
  Program out = p;
  lang::annotate(out);
  return out;
}

TransformResult finish(const Program& input, Program output,
                       std::vector<Edit> edits,
                       std::map<std::string, std::string> config) {
  TransformResult r;
  r.config = std::move(config);
  if (edits.empty()) {
    r.program = input;
    return r;
  }
  r.applicable = true;
  r.edits = std::move(edits);
  r.program = std::move(output);
  return r;
}

bool has_call(const Expr& e) {
  bool found = false;
  lang::visit_exprs(e, [&](const Expr& x) {
    if (x.kind == ExprKind::Call) found = true;
  });
  return found;
}

bool is_pure(const Expr& e) {
  bool pure = true;
  lang::visit_exprs(e, [&](const Expr& x) {
    if (x.kind != ExprKind::Call) return;
    auto b = lang::find_builtin(x.name);
    if (!b || !b->pure) pure = false;
  });
  return pure;
}

bool may_fault(const Expr& e) {
  bool fault = false;
  lang::visit_exprs(e, [&](const Expr& x) {
    switch (x.kind) {
      case ExprKind::Index:
        fault = true;
        break;
      case ExprKind::Binary:
        if ((x.binary_op == lang::BinaryOp::Div ||
             x.binary_op == lang::BinaryOp::Mod) &&
            !x.type.is_floating())
          fault = true;
        break;
      case ExprKind::Call: {
        auto b = lang::find_builtin(x.name);
        if (!b || b->may_fault) fault = true;
        break;
      }
      default:
        break;
    }
  });
  return fault;
}

void collect_reads(const Expr& e, std::set<std::string>& out) {
  lang::visit_exprs(e, [&](const Expr& x) {
    if (x.kind == ExprKind::Var) out.insert(x.name);
  });
}

void collect_reads(const Stmt& s, std::set<std::string>& out) {
  lang::visit_stmts(s, [&](const Stmt& st) {
    lang::visit_own_exprs(st, [&](const Expr& x) {
      if (x.kind == ExprKind::Var) out.insert(x.name);
    });
  });
}

void collect_writes(const Stmt& s, std::set<std::string>& out) {
  lang::visit_stmts(s, [&](const Stmt& st) {
    if (st.kind == StmtKind::VarDecl) out.insert(st.name);
    if (st.kind == StmtKind::Assign) {
      const Expr* t = &*st.target;
      while (t->kind == ExprKind::Index) t = &t->operands[0];
      if (t->kind == ExprKind::Var) out.insert(t->name);
    }
    lang::visit_own_exprs(st, [&](const Expr& x) {
      if (x.kind == ExprKind::Call && x.name == "Sort" && !x.operands.empty() &&
          x.operands[0].kind == ExprKind::Var)
        out.insert(x.operands[0].name);
    });
  });
}

void collect_writes(const std::vector<Stmt>& list, std::set<std::string>& out) {
  for (const auto& s : list) collect_writes(s, out);
}

std::set<std::string> variable_names(const Function& f) {
  std::set<std::string> names;
  for (const auto& p : f.params) names.insert(p.name);
  lang::visit_stmts(f.body, [&](const Stmt& s) {
    if (s.kind == StmtKind::VarDecl) names.insert(s.name);
    lang::visit_own_exprs(s, [&](const Expr& x) {
      if (x.kind == ExprKind::Var) names.insert(x.name);
    });
  });
  return names;
}

std::string fresh_name(const Program& p, const Function& f,
                       std::string_view base,
                       const std::set<std::string>& taken) {
  std::set<std::string> used = variable_names(f);
  for (int k = 0;; ++k) {
    std::string name(base);
    if (k) name += std::to_string(k);
    if (used.count(name) || taken.count(name) || p.find(name) ||
        lang::find_builtin(name))
      continue;
    return name;
  }
}

bool is_bool_literal(const Expr& e, bool value) {
  return e.kind == ExprKind::Literal && e.literal.type == lang::Scalar::Bool &&
         e.literal.bool_value == value;
}

bool is_literal(const Expr& e) { return e.kind == ExprKind::Literal; }

}  // namespace coset::transforms::detail
