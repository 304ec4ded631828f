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

bool constant(const Expr& e) {
  if (e.kind == ExprKind::Literal) return true;
  return e.kind == ExprKind::Unary && e.unary_op == lang::UnaryOp::Neg &&
         e.operands[0].kind == ExprKind::Literal;
}

bool is_guard(const Stmt& s) {
  if (s.kind != StmtKind::If || s.has_else || s.body.size() != 1) return false;
  const Stmt& r = s.body[0];
  return r.kind == StmtKind::Return && (!r.expr || constant(*r.expr));
}

}  // namespace

std::vector<const Stmt*> leading_guards(const Program& p) {
  std::vector<const Stmt*> out;
  if (p.functions.empty()) return out;
  for (const auto& s : p.entry().body) {
    if (!is_guard(s)) break;
    out.push_back(&s);
  }
  return out;
}

TransformResult strip_error_handling(const Program& p,
                                     std::optional<lang::NodeId> site) {
  Program out = p;
  std::vector<Edit> edits;
  if (!out.functions.empty()) {
    auto& body = out.entry().body;
    std::size_t k = 0;
    while (k < body.size() && is_guard(body[k])) {
      if (!site || *site == body[k].id) {
        edits.push_back({body[k].span, body[k].id, "remove guard clause"});
        body.erase(body.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        ++k;
      }
    }
  }
  std::map<std::string, std::string> config;
  if (site) config["site"] = std::to_string(*site);
  return finish(p, std::move(out), std::move(edits), std::move(config));
}

}  // namespace coset::transforms
