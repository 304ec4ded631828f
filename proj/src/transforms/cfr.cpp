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

// Control flag removal for loops of the form
//
//     bool done = false;
//     while (!done && rest) { ... if (c) { done = true; } }
//
// The flag must be declared with a constant in the same block as the loop,
// read only as one conjunct of the loop condition and written exactly once,
// by the last statement executed in an iteration. That write becomes a
// break. Conjuncts left of the flag are evaluated once more by the original
// loop after the write, so they must be free of effects and faults.

#include "common.hpp"

namespace coset::transforms {

using namespace detail;
using lang::BinaryOp;

namespace {

void conjuncts(const Expr& e, std::vector<Expr>& out) {
  if (e.kind == ExprKind::Binary && e.binary_op == BinaryOp::And) {
    conjuncts(e.operands[0], out);
    conjuncts(e.operands[1], out);
    return;
  }
  out.push_back(e);
}

// Name of the flag and the value that keeps the loop running.
std::optional<std::pair<std::string, bool>> flag_test(const Expr& e) {
  if (e.kind == ExprKind::Var && e.type == lang::Type::scalar(lang::Scalar::Bool))
    return std::make_pair(e.name, true);
  if (e.kind == ExprKind::Unary && e.unary_op == lang::UnaryOp::Not &&
      e.operands[0].kind == ExprKind::Var)
    return std::make_pair(e.operands[0].name, false);
  return std::nullopt;
}

struct Refs {
  int decls = 0;
  int reads = 0;
  int writes = 0;
};

Refs count_refs(const Function& f, const std::string& name) {
  Refs r;
  for (const auto& prm : f.params)
    if (prm.name == name) ++r.decls;
  lang::visit_stmts(f.body, [&](const Stmt& s) {
    if (s.kind == StmtKind::VarDecl && s.name == name) ++r.decls;
    if (s.kind == StmtKind::Assign) {
      if (s.target->kind == ExprKind::Var && s.target->name == name) ++r.writes;
      else lang::visit_exprs(*s.target, [&](const Expr& x) {
        if (x.kind == ExprKind::Var && x.name == name) ++r.reads;
      });
    }
    if (s.expr) {
      lang::visit_exprs(*s.expr, [&](const Expr& x) {
        if (x.kind == ExprKind::Var && x.name == name) ++r.reads;
      });
    }
  });
  return r;
}

// The statement ending an iteration that assigns `name`, reached from the
// loop body through if/else branches and blocks only.
Stmt* tail_store(std::vector<Stmt>& list, const std::string& name) {
  if (list.empty()) return nullptr;
  Stmt& last = list.back();
  if (last.kind == StmtKind::Assign && last.target->kind == ExprKind::Var &&
      last.target->name == name)
    return &last;
  if (last.kind == StmtKind::Block) return tail_store(last.body, name);
  if (last.kind == StmtKind::If) {
    if (Stmt* s = tail_store(last.body, name)) return s;
    return tail_store(last.else_body, name);
  }
  return nullptr;
}

class FlagRemover {
 public:
  FlagRemover(Program& p, Function& f, std::vector<Edit>& edits)
      : p_(p), f_(f), edits_(edits) {}

  void run(std::vector<Stmt>& list) {
    for (std::size_t w = 0; w < list.size(); ++w) {
      Stmt& s = list[w];
      run(s.body);
      run(s.else_body);
      for (auto& c : s.cases) run(c.body);
      if (s.default_body) run(*s.default_body);
      if (s.kind == StmtKind::While && try_remove(list, w)) --w;
    }
  }

 private:
  bool try_remove(std::vector<Stmt>& list, std::size_t w) {
    Stmt& loop = list[w];
    std::vector<Expr> parts;
    conjuncts(*loop.expr, parts);
    for (std::size_t ci = 0; ci < parts.size(); ++ci) {
      auto test = flag_test(parts[ci]);
      if (!test) continue;
      const auto& [flag, running] = *test;

      std::size_t d = w;
      for (std::size_t k = 0; k < w; ++k)
        if (list[k].kind == StmtKind::VarDecl && list[k].name == flag) d = k;
      if (d == w) continue;
      const Stmt& decl = list[d];
      bool initial = false;
      if (decl.expr) {
        if (decl.expr->kind != ExprKind::Literal) continue;
        initial = decl.expr->literal.bool_value;
      }
      if (initial != running) continue;

      Refs refs = count_refs(f_, flag);
      if (refs.decls != 1 || refs.reads != 1 || refs.writes != 1) continue;
      Stmt* store = tail_store(loop.body, flag);
      if (!store || !is_bool_literal(*store->expr, !running)) continue;
      bool safe_prefix = true;
      for (std::size_t k = 0; k < ci; ++k)
        if (!is_safe(parts[k])) safe_prefix = false;
      if (!safe_prefix) continue;

      edits_.push_back({decl.span, decl.id, "remove control flag " + flag});
      edits_.push_back({store->span, store->id, "replace flag store with break"});
      Stmt brk = Stmt::make_break();
      brk.span = store->span;
      brk.id = p_.fresh_id();
      *store = std::move(brk);

      parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(ci));
      Expr cond;
      if (parts.empty()) {
        cond = Expr::make_literal(lang::Literal::of_bool(true));
        cond.span = loop.expr->span;
        cond.id = p_.fresh_id();
      } else {
        cond = std::move(parts[0]);
        for (std::size_t k = 1; k < parts.size(); ++k) {
          cond = Expr::make_binary(BinaryOp::And, std::move(cond), std::move(parts[k]));
          cond.span = loop.expr->span;
          cond.id = p_.fresh_id();
        }
      }
      loop.expr = std::move(cond);
      list.erase(list.begin() + static_cast<std::ptrdiff_t>(d));
      return true;
    }
    return false;
  }

  Program& p_;
  Function& f_;
  std::vector<Edit>& edits_;
};

}  // namespace

TransformResult remove_control_flags(const Program& p) {
  Program out = prepare(p);
  std::vector<Edit> edits;
  for (auto& f : out.functions) FlagRemover(out, f, edits).run(f.body);
  return finish(p, std::move(out), std::move(edits));
}

}  // namespace coset::transforms
