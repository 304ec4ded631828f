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

namespace {

bool mergeable(const Stmt& s) {
  return s.kind == StmtKind::If && !s.has_else && s.body.size() == 1 &&
         s.body[0].kind == StmtKind::If && !s.body[0].has_else;
}

void simplify(Program& p, std::vector<Stmt>& list, std::vector<Edit>& edits) {
  for (auto& s : list) {
    while (mergeable(s)) {
      edits.push_back({s.span, s.id, "merge nested conditions"});
      Expr rhs = std::move(s.body[0].expr.value());
      std::vector<Stmt> inner = std::move(s.body[0].body);
      Expr cond = Expr::make_binary(lang::BinaryOp::And, std::move(*s.expr), std::move(rhs));
      cond.span = s.span;
      cond.id = p.fresh_id();
      s.expr = std::move(cond);
      s.body = std::move(inner);
    }
    simplify(p, s.body, edits);
    simplify(p, s.else_body, edits);
    for (auto& c : s.cases) simplify(p, c.body, edits);
    if (s.default_body) simplify(p, *s.default_body, edits);
  }
}

}  // namespace

TransformResult simplify_nested_conditions(const Program& p) {
  Program out = p;
  std::vector<Edit> edits;
  for (auto& f : out.functions) simplify(out, f.body, edits);
  return finish(p, std::move(out), std::move(edits));
}

}  // namespace coset::transforms
