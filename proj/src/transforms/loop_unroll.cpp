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

namespace coset::transforms {

using namespace detail;
using lang::BinaryOp;
using lang::Literal;

namespace {

struct Induction {
  std::string var;
  lang::Type type;
  std::int64_t stride = 0;
};

bool has_own_jump(const std::vector<Stmt>& body) {
  for (const auto& s : body) {
    if (s.kind == StmtKind::Break || s.kind == StmtKind::Continue) return true;
    if (s.is_loop()) continue;
    if (has_own_jump(s.body) || has_own_jump(s.else_body)) return true;
    for (const auto& c : s.cases)
      if (has_own_jump(c.body)) return true;
    if (s.default_body && has_own_jump(*s.default_body)) return true;
  }
  return false;
}

std::optional<std::int64_t> positive_literal(const Expr& e) {
  if (e.kind != ExprKind::Literal) return std::nullopt;
  if (e.literal.type != lang::Scalar::Int && e.literal.type != lang::Scalar::Long)
    return std::nullopt;
  if (e.literal.int_value <= 0) return std::nullopt;
  return e.literal.int_value;
}

std::optional<Induction> match(const Stmt& s) {
  if (s.kind != StmtKind::For || !s.expr || s.step.size() != 1) return std::nullopt;
  const Expr& cond = *s.expr;
  if (cond.kind != ExprKind::Binary ||
      (cond.binary_op != BinaryOp::Lt && cond.binary_op != BinaryOp::Le))
    return std::nullopt;
  const Expr& iv = cond.operands[0];
  const Expr& bound = cond.operands[1];
  if (iv.kind != ExprKind::Var || !iv.type.is_integral()) return std::nullopt;
  if (!is_safe(bound)) return std::nullopt;

  Induction ind{iv.name, iv.type, 0};
  const Stmt& st = s.step[0];
  if (st.kind != StmtKind::Assign || st.target->kind != ExprKind::Var ||
      st.target->name != ind.var)
    return std::nullopt;
  std::optional<std::int64_t> c;
  if (st.assign_op == lang::AssignOp::Add) {
    c = positive_literal(*st.expr);
  } else if (st.assign_op == lang::AssignOp::Set) {
    const Expr& r = *st.expr;
    if (r.kind == ExprKind::Binary && r.binary_op == BinaryOp::Add &&
        r.operands[0].kind == ExprKind::Var && r.operands[0].name == ind.var)
      c = positive_literal(r.operands[1]);
  }
  if (!c) return std::nullopt;
  ind.stride = *c;

  if (has_own_jump(s.body)) return std::nullopt;
  std::set<std::string> writes;
  collect_writes(s.body, writes);
  std::set<std::string> bound_vars;
  collect_reads(bound, bound_vars);
  if (writes.count(ind.var)) return std::nullopt;
  for (const auto& b : bound_vars)
    if (writes.count(b) || b == ind.var) return std::nullopt;
  return ind;
}

class Unroller {
 public:
  Unroller(Program& p, int factor, std::vector<Edit>& edits)
      : p_(p), k_(factor), edits_(edits) {}

  void run(std::vector<Stmt>& list) {
    for (auto& s : list) {
      run(s.body);
      run(s.else_body);
      for (auto& c : s.cases) run(c.body);
      if (s.default_body) run(*s.default_body);
      if (auto ind = match(s)) s = unroll(std::move(s), *ind);
    }
  }

 private:
  Expr with_span(Expr e, const lang::Span& span) {
    e.span = span;
    e.id = p_.fresh_id();
    return e;
  }

  Stmt block(std::vector<Stmt> body, const lang::Span& span) {
    Stmt b = Stmt::make_block(std::move(body));
    b.span = span;
    b.id = p_.fresh_id();
    return b;
  }

  template <typename T>
  T copy(const T& node) {
    T c = node;
    p_.renumber(c);
    return c;
  }

  std::vector<Stmt> copy(const std::vector<Stmt>& list) {
    std::vector<Stmt> c = list;
    for (auto& s : c) p_.renumber(s);
    return c;
  }

  Stmt unroll(Stmt loop, const Induction& ind) {
    const lang::Span span = loop.span;
    edits_.push_back({span, loop.id,
                      "unroll loop over " + ind.var + " by " + std::to_string(k_)});
    const Expr& cond = *loop.expr;
    std::int64_t ahead = ind.stride * (k_ - 1);
    Literal lit = ind.type.base == lang::Scalar::Long ? Literal::of_long(ahead)
                                                       : Literal::of_int(ahead);
    Expr lead = with_span(
        Expr::make_binary(BinaryOp::Add, copy(cond.operands[0]),
                          with_span(Expr::make_literal(lit), span)),
        span);
    Expr main_cond = with_span(
        Expr::make_binary(cond.binary_op, std::move(lead), copy(cond.operands[1])),
        span);

    Stmt main;
    main.kind = StmtKind::For;
    main.span = span;
    main.id = p_.fresh_id();
    main.expr = std::move(main_cond);
    for (int r = 0; r < k_; ++r) {
      main.body.push_back(block(copy(loop.body), span));
      main.body.push_back(copy(loop.step[0]));
    }

    std::vector<Stmt> outer;
    for (auto& i : loop.init) outer.push_back(std::move(i));
    loop.init.clear();
    outer.push_back(std::move(main));
    outer.push_back(std::move(loop));
    return block(std::move(outer), span);
  }

  Program& p_;
  int k_;
  std::vector<Edit>& edits_;
};

}  // namespace

TransformResult loop_unroll(const Program& p, int factor) {
  std::map<std::string, std::string> config{{"factor", std::to_string(factor)}};
  if (factor < 2) return finish(p, p, {}, config);
  Program out = prepare(p);
  std::vector<Edit> edits;
  Unroller u(out, factor, edits);
  for (auto& f : out.functions) u.run(f.body);
  return finish(p, std::move(out), std::move(edits), config);
}

}  // namespace coset::transforms
