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

// Dead code elimination. Runs its rules to a fixpoint so that a second
// application finds nothing:
//  - statements after return/break/continue are unreachable;
//  - if/while/for with a literal condition are resolved;
//  - stores to variables that are dead afterwards are removed when the
//    stored expression is pure and cannot fault (backward liveness; loops are
//    iterated to a fixpoint);
//  - variables only ever used to update themselves are removed with all
//    their stores.

#include <algorithm>

#include "common.hpp"
#include "coset/lang/printer.hpp"

namespace coset::transforms {

using namespace detail;

namespace {

using Live = std::set<std::string>;

bool always_jumps(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::Return:
    case StmtKind::Break:
    case StmtKind::Continue:
      return true;
    case StmtKind::Block:
      return std::any_of(s.body.begin(), s.body.end(), always_jumps);
    case StmtKind::If:
      return s.has_else &&
             std::any_of(s.body.begin(), s.body.end(), always_jumps) &&
             std::any_of(s.else_body.begin(), s.else_body.end(), always_jumps);
    default:
      return false;
  }
}

bool declares_directly(const std::vector<Stmt>& list) {
  return std::any_of(list.begin(), list.end(), [](const Stmt& s) {
    return s.kind == StmtKind::VarDecl;
  });
}

// A compound assignment whose operator can fault on its own.
bool op_may_fault(const Stmt& s) {
  if (s.assign_op != lang::AssignOp::Div && s.assign_op != lang::AssignOp::Mod)
    return false;
  return !s.target->type.is_floating();
}

bool removable_store(const Stmt& s) {
  return s.expr && is_safe(*s.expr) && !op_may_fault(s);
}

Live reads_of(const Expr& e) {
  Live out;
  collect_reads(e, out);
  return out;
}

void add(Live& to, const Live& from) { to.insert(from.begin(), from.end()); }

class Eliminator {
 public:
  Eliminator(Program& p, std::vector<Edit>& edits) : p_(p), edits_(edits) {}

  void run(Function& f) {
    bool again = true;
    while (again) {
      again = false;
      again |= structural(f.body);
      again |= faint(f);
      again |= dead_stores(f);
    }
  }

 private:
  void note(const Stmt& s, std::string what) {
    edits_.push_back({s.span, s.id, std::move(what)});
  }

  // Moves `branch` into `out`, keeping a block when it declares variables.
  void emit_branch(std::vector<Stmt>& out, std::vector<Stmt> branch,
                   const Stmt& origin) {
    if (branch.empty()) return;
    if (declares_directly(branch)) {
      Stmt b = Stmt::make_block(std::move(branch));
      b.span = origin.span;
      b.id = p_.fresh_id();
      out.push_back(std::move(b));
    } else {
      for (auto& s : branch) out.push_back(std::move(s));
    }
  }

  bool structural(std::vector<Stmt>& body) {
    bool changed = false;
    for_each_list(body, [&](std::vector<Stmt>& list) {
      std::vector<Stmt> out;
      for (std::size_t k = 0; k < list.size(); ++k) {
        Stmt& s = list[k];
        if (!out.empty() && always_jumps(out.back())) {
          for (std::size_t r = k; r < list.size(); ++r)
            note(list[r], "remove unreachable statement");
          changed = true;
          break;
        }
        if (s.kind == StmtKind::If && is_literal(*s.expr)) {
          bool c = s.expr->literal.bool_value;
          note(s, std::string("resolve constant condition ") + (c ? "true" : "false"));
          emit_branch(out, c ? std::move(s.body) : std::move(s.else_body), s);
          changed = true;
          continue;
        }
        if (s.kind == StmtKind::While && is_bool_literal(*s.expr, false)) {
          note(s, "remove loop with constant false condition");
          changed = true;
          continue;
        }
        if (s.kind == StmtKind::For && s.expr && is_bool_literal(*s.expr, false)) {
          note(s, "remove loop with constant false condition");
          emit_branch(out, std::move(s.init), s);
          changed = true;
          continue;
        }
        if (s.kind == StmtKind::Block && s.body.empty()) {
          note(s, "remove empty block");
          changed = true;
          continue;
        }
        out.push_back(std::move(s));
      }
      list = std::move(out);
    });
    return changed;
  }

  struct Jumps {
    Live brk;
    Live cont;
  };

  Live list(std::vector<Stmt>& l, Live out, const Jumps* j, bool remove) {
    for (std::size_t k = l.size(); k-- > 0;) {
      bool erase = false;
      out = stmt(l[k], out, j, remove, erase);
      if (erase) l.erase(l.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return out;
  }

  Live stmt(Stmt& s, const Live& out, const Jumps* j, bool remove, bool& erase) {
    switch (s.kind) {
      case StmtKind::VarDecl: {
        if (remove && s.expr && !out.count(s.name) && is_safe(*s.expr)) {
          note(s, "drop dead initializer of " + s.name);
          s.expr.reset();
          changed_ = true;
        }
        Live in = out;
        in.erase(s.name);
        if (s.expr) add(in, reads_of(*s.expr));
        return in;
      }
      case StmtKind::Assign: {
        const Expr& t = *s.target;
        if (t.kind == ExprKind::Var) {
          if (remove && !out.count(t.name) && removable_store(s)) {
            note(s, "remove dead store to " + t.name);
            erase = true;
            changed_ = true;
            return out;
          }
          Live in = out;
          if (s.assign_op == lang::AssignOp::Set) in.erase(t.name);
          else in.insert(t.name);
          add(in, reads_of(*s.expr));
          return in;
        }
        Live in = out;
        add(in, reads_of(t));
        add(in, reads_of(*s.expr));
        return in;
      }
      case StmtKind::If: {
        Live in = list(s.body, out, j, remove);
        add(in, list(s.else_body, out, j, remove));
        add(in, reads_of(*s.expr));
        return in;
      }
      case StmtKind::While: {
        Live cond = reads_of(*s.expr);
        Live head = out;
        add(head, cond);
        while (true) {
          Jumps lj{out, head};
          Live next = out;
          add(next, cond);
          add(next, list(s.body, head, &lj, false));
          if (next == head) break;
          head = std::move(next);
        }
        if (remove) {
          Jumps lj{out, head};
          list(s.body, head, &lj, true);
        }
        return head;
      }
      case StmtKind::For: {
        Live cond = s.expr ? reads_of(*s.expr) : Live{};
        Live head = out;
        add(head, cond);
        while (true) {
          Live before_step = list(s.step, head, nullptr, false);
          Jumps lj{out, before_step};
          Live next = out;
          add(next, cond);
          add(next, list(s.body, before_step, &lj, false));
          if (next == head) break;
          head = std::move(next);
        }
        if (remove) {
          Live before_step = list(s.step, head, nullptr, false);
          Jumps lj{out, before_step};
          list(s.body, before_step, &lj, true);
        }
        return list(s.init, head, nullptr, false);
      }
      case StmtKind::Switch: {
        Live in = reads_of(*s.expr);
        for (auto& c : s.cases) add(in, list(c.body, out, j, remove));
        if (s.default_body) add(in, list(*s.default_body, out, j, remove));
        else add(in, out);
        return in;
      }
      case StmtKind::Return:
        return s.expr ? reads_of(*s.expr) : Live{};
      case StmtKind::Break:
        return j ? j->brk : out;
      case StmtKind::Continue:
        return j ? j->cont : out;
      case StmtKind::ExprStmt: {
        Live in = out;
        add(in, reads_of(*s.expr));
        return in;
      }
      case StmtKind::Block:
        return list(s.body, out, j, remove);
    }
    return out;
  }

  bool dead_stores(Function& f) {
    changed_ = false;
    list(f.body, {}, nullptr, true);
    return changed_;
  }

  // Variables whose every use is a store to themselves.
  bool faint(Function& f) {
    std::map<std::string, bool> candidate;
    lang::visit_stmts(f.body, [&](const Stmt& s) {
      if (s.kind == StmtKind::VarDecl) {
        candidate.try_emplace(s.name, true);
        if (s.expr && !is_safe(*s.expr)) candidate[s.name] = false;
      }
    });
    for (const auto& prm : f.params) candidate[prm.name] = false;
    lang::visit_stmts(f.body, [&](const Stmt& s) {
      const std::string* self = nullptr;
      if (s.kind == StmtKind::Assign && s.target->kind == ExprKind::Var) {
        self = &s.target->name;
        if (!removable_store(s)) candidate[*self] = false;
      }
      Live reads;
      if (s.kind == StmtKind::Assign && s.target->kind == ExprKind::Index)
        collect_reads(*s.target, reads);
      if (s.expr) collect_reads(*s.expr, reads);
      for (const auto& r : reads)
        if (!self || r != *self) candidate[r] = false;
    });
    bool changed = false;
    for (const auto& [name, ok] : candidate) {
      if (!ok) continue;
      for_each_list(f.body, [&](std::vector<Stmt>& l) {
        for (std::size_t k = l.size(); k-- > 0;) {
          const Stmt& s = l[k];
          bool hit = (s.kind == StmtKind::VarDecl && s.name == name) ||
                     (s.kind == StmtKind::Assign &&
                      s.target->kind == ExprKind::Var && s.target->name == name);
          if (!hit) continue;
          note(s, "remove unused variable " + name);
          l.erase(l.begin() + static_cast<std::ptrdiff_t>(k));
          changed = true;
        }
      });
    }
    return changed;
  }

  Program& p_;
  std::vector<Edit>& edits_;
  bool changed_ = false;
};

}  // namespace

TransformResult dce(const Program& p) {
  Program out = prepare(p);
  std::vector<Edit> edits;
  Eliminator elim(out, edits);
  for (auto& f : out.functions) elim.run(f);
  return finish(p, std::move(out), std::move(edits));
}

}  // namespace coset::transforms
