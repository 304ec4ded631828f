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

// Loop-invariant code motion. Outer loops are processed before the loops
// they contain; a hoisted expression lands in a fresh temporary declared
// right before the loop.

#include "common.hpp"
#include "coset/lang/printer.hpp"

namespace coset::transforms {

using namespace detail;
using lang::BinaryOp;

namespace {

bool has_division(const Expr& e) {
  bool found = false;
  lang::visit_exprs(e, [&](const Expr& x) {
    if (x.kind == ExprKind::Binary &&
        (x.binary_op == BinaryOp::Div || x.binary_op == BinaryOp::Mod))
      found = true;
  });
  return found;
}

bool reads_variable(const Expr& e) {
  bool found = false;
  lang::visit_exprs(e, [&](const Expr& x) {
    if (x.kind == ExprKind::Var) found = true;
  });
  return found;
}

struct Temp {
  Expr expr;
  std::string name;
};

class Hoister {
 public:
  Hoister(Program& p, Function& f, std::vector<Edit>& edits)
      : p_(p), f_(f), edits_(edits) {}

  void run(std::vector<Stmt>& list) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (list[k].is_loop()) {
        std::vector<Stmt> decls = hoist_from(list[k]);
        for (auto& d : decls) {
          list.insert(list.begin() + static_cast<std::ptrdiff_t>(k), std::move(d));
          ++k;
        }
      }
      Stmt& s = list[k];
      run(s.body);
      run(s.else_body);
      for (auto& c : s.cases) run(c.body);
      if (s.default_body) run(*s.default_body);
    }
  }

 private:
  bool hoistable(const Expr& e) const {
    if (e.kind != ExprKind::Unary && e.kind != ExprKind::Binary) return false;
    if (!reads_variable(e) || !is_safe(e) || has_division(e)) return false;
    std::set<std::string> reads;
    collect_reads(e, reads);
    for (const auto& r : reads)
      if (writes_.count(r)) return false;
    return true;
  }

  void replace(Expr& e) {
    if (hoistable(e)) {
      std::string name;
      for (const auto& t : temps_)
        if (t.expr == e) name = t.name;
      if (name.empty()) {
        name = fresh_name(p_, f_, "t", taken_);
        taken_.insert(name);
        temps_.push_back({e, name});
      }
      edits_.push_back({e.span, e.id, "hoist " + lang::print(e) + " into " + name});
      Expr v = Expr::make_var(name);
      v.span = e.span;
      v.id = p_.fresh_id();
      v.type = e.type;
      e = std::move(v);
      return;
    }
    for (auto& o : e.operands) replace(o);
  }

  void replace_in(std::vector<Stmt>& list) {
    for (auto& s : list) {
      if (s.target) replace(*s.target);
      if (s.expr) replace(*s.expr);
      replace_in(s.init);
      replace_in(s.step);
      replace_in(s.body);
      replace_in(s.else_body);
      for (auto& c : s.cases) replace_in(c.body);
      if (s.default_body) replace_in(*s.default_body);
    }
  }

  std::vector<Stmt> hoist_from(Stmt& loop) {
    writes_.clear();
    collect_writes(loop, writes_);
    temps_.clear();
    if (loop.expr) replace(*loop.expr);
    replace_in(loop.step);
    replace_in(loop.body);
    std::vector<Stmt> decls;
    for (auto& t : temps_) {
      lang::Type type = t.expr.type;
      lang::Span span = t.expr.span;
      p_.renumber(t.expr);
      Stmt d = Stmt::make_decl(type, t.name, std::move(t.expr));
      d.span = span;
      d.id = p_.fresh_id();
      decls.push_back(std::move(d));
    }
    return decls;
  }

  Program& p_;
  Function& f_;
  std::vector<Edit>& edits_;
  std::set<std::string> writes_;
  std::set<std::string> taken_;
  std::vector<Temp> temps_;
};

}  // namespace

TransformResult hoist(const Program& p) {
  Program out = prepare(p);
  std::vector<Edit> edits;
  for (auto& f : out.functions) Hoister(out, f, edits).run(f.body);
  return finish(p, std::move(out), std::move(edits));
}

}  // namespace coset::transforms
