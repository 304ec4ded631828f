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

namespace {

// Replaces continues that target the current loop by `{ step; continue; }`.
void expand_continues(Program& p, std::vector<Stmt>& list, const Stmt& step) {
  for (auto& s : list) {
    if (s.kind == StmtKind::Continue) {
      Stmt cont = std::move(s);
      Stmt copy = step;
      p.renumber(copy);
      std::vector<Stmt> body;
      body.push_back(std::move(copy));
      body.push_back(std::move(cont));
      s = Stmt::make_block(std::move(body));
      s.span = s.body.back().span;
      s.id = p.fresh_id();
      continue;
    }
    if (s.is_loop()) continue;
    expand_continues(p, s.body, step);
    expand_continues(p, s.else_body, step);
    for (auto& c : s.cases) expand_continues(p, c.body, step);
    if (s.default_body) expand_continues(p, *s.default_body, step);
  }
}

class Unifier {
 public:
  Unifier(Program& p, Function& f, CsuDirection dir,
          std::optional<lang::NodeId> site, std::vector<Edit>& edits)
      : p_(p), f_(f), dir_(dir), site_(site), edits_(edits) {}

  void run(std::vector<Stmt>& list) {
    std::vector<Stmt> out;
    out.reserve(list.size());
    for (auto& s : list) {
      run(s.init);
      run(s.body);
      run(s.else_body);
      for (auto& c : s.cases) run(c.body);
      if (s.default_body) run(*s.default_body);
      bool selected = !site_ || *site_ == s.id;
      if (s.kind == StmtKind::Switch && selected && !s.cases.empty() &&
          dir_ != CsuDirection::ForToWhile) {
        switch_to_if(s, out);
      } else if (s.kind == StmtKind::For && selected &&
                 dir_ != CsuDirection::SwitchToIf) {
        for_to_while(s, out);
      } else {
        out.push_back(std::move(s));
      }
    }
    list = std::move(out);
  }

 private:
  Expr fresh(Expr e, const lang::Span& span) {
    e.span = span;
    e.id = p_.fresh_id();
    return e;
  }

  void switch_to_if(Stmt& s, std::vector<Stmt>& out) {
    edits_.push_back({s.span, s.id, "switch to if-else chain"});
    Expr scrutinee = std::move(*s.expr);
    if (!is_pure(scrutinee)) {
      std::string name = fresh_name(p_, f_, "sw", taken_);
      taken_.insert(name);
      lang::Type t = scrutinee.type;
      lang::Span span = scrutinee.span;
      Stmt decl = Stmt::make_decl(t, name, std::move(scrutinee));
      decl.span = span;
      decl.id = p_.fresh_id();
      out.push_back(std::move(decl));
      scrutinee = fresh(Expr::make_var(name), span);
    }

    std::optional<Stmt> chain;
    if (s.default_body) {
      chain = Stmt::make_block(std::move(*s.default_body));
    }
    for (std::size_t k = s.cases.size(); k-- > 0;) {
      auto& c = s.cases[k];
      Expr label = fresh(Expr::make_literal(c.label), c.span);
      Expr scrut = scrutinee;
      p_.renumber(scrut);
      Expr cond = fresh(Expr::make_binary(BinaryOp::Eq, std::move(scrut),
                                          std::move(label)),
                        c.span);
      Stmt branch;
      if (chain) {
        std::vector<Stmt> rest;
        if (chain->kind == StmtKind::Block) rest = std::move(chain->body);
        else rest.push_back(std::move(*chain));
        branch = Stmt::make_if_else(std::move(cond), std::move(c.body),
                                    std::move(rest));
      } else {
        branch = Stmt::make_if(std::move(cond), std::move(c.body));
      }
      branch.span = k == 0 ? s.span : c.span;
      branch.id = p_.fresh_id();
      chain = std::move(branch);
    }
    out.push_back(std::move(*chain));
  }

  void for_to_while(Stmt& s, std::vector<Stmt>& out) {
    edits_.push_back({s.span, s.id, "for to while"});
    Expr cond = s.expr ? std::move(*s.expr)
                       : fresh(Expr::make_literal(lang::Literal::of_bool(true)),
                               s.span);
    std::vector<Stmt> body = std::move(s.body);
    if (!s.step.empty()) {
      expand_continues(p_, body, s.step[0]);
      body.push_back(std::move(s.step[0]));
    }
    Stmt loop = Stmt::make_while(std::move(cond), std::move(body));
    loop.span = s.span;
    loop.id = p_.fresh_id();
    if (s.init.empty()) {
      out.push_back(std::move(loop));
    } else if (s.init[0].kind == StmtKind::VarDecl) {
      std::vector<Stmt> block;
      block.push_back(std::move(s.init[0]));
      block.push_back(std::move(loop));
      Stmt b = Stmt::make_block(std::move(block));
      b.span = s.span;
      b.id = p_.fresh_id();
      out.push_back(std::move(b));
    } else {
      out.push_back(std::move(s.init[0]));
      out.push_back(std::move(loop));
    }
  }

  Program& p_;
  Function& f_;
  CsuDirection dir_;
  std::optional<lang::NodeId> site_;
  std::vector<Edit>& edits_;
  std::set<std::string> taken_;
};

}  // namespace

TransformResult unify_control_statements(const Program& p,
                                         CsuDirection direction,
                                         std::optional<lang::NodeId> site) {
  Program out = prepare(p);
  std::vector<Edit> edits;
  for (auto& f : out.functions)
    Unifier(out, f, direction, site, edits).run(f.body);
  std::map<std::string, std::string> config{{"direction", to_string(direction)}};
  if (site) config["site"] = std::to_string(*site);
  return finish(p, std::move(out), std::move(edits), std::move(config));
}

}  // namespace coset::transforms
