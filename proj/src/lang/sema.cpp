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

#include "coset/lang/sema.hpp"

#include <set>
#include <unordered_map>

#include "coset/lang/builtins.hpp"
#include "coset/lang/parser.hpp"

namespace coset::lang {

bool assignable(Type to, Type from) {
  if (to == from) return true;
  if (to.array || from.array) return false;
  return (to.base == Scalar::Long && from.base == Scalar::Int) ||
         (to.base == Scalar::Double && from.base == Scalar::Float);
}

namespace {

bool is_infinite_loop(const Stmt& s);

bool stmt_returns(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::Return:
      return true;
    case StmtKind::Block:
      return always_returns(s.body);
    case StmtKind::If:
      return s.has_else && always_returns(s.body) &&
             always_returns(s.else_body);
    case StmtKind::Switch: {
      if (!s.default_body || !always_returns(*s.default_body)) return false;
      for (const auto& c : s.cases)
        if (!always_returns(c.body)) return false;
      return true;
    }
    case StmtKind::While:
    case StmtKind::For:
      return is_infinite_loop(s);
    default:
      return false;
  }
}

// A break that targets `loop` itself (not a nested loop).
bool has_own_break(const std::vector<Stmt>& body) {
  for (const auto& s : body) {
    if (s.kind == StmtKind::Break) return true;
    if (s.is_loop()) continue;
    if (has_own_break(s.body) || has_own_break(s.else_body)) return true;
    for (const auto& c : s.cases)
      if (has_own_break(c.body)) return true;
    if (s.default_body && has_own_break(*s.default_body)) return true;
  }
  return false;
}

bool is_infinite_loop(const Stmt& s) {
  bool const_true =
      !s.expr || (s.expr->kind == ExprKind::Literal &&
                  s.expr->literal.type == Scalar::Bool &&
                  s.expr->literal.bool_value);
  return const_true && !has_own_break(s.body);
}

struct VarInfo {
  Type type;
  int slot;
};

class Checker {
 public:
  Checker(Program& p, Diagnostics& diags) : p_(p), diags_(diags) {}

  void run() {
    for (std::size_t i = 0; i < p_.functions.size(); ++i)
      function_index_[p_.functions[i].name] = static_cast<int>(i);
    for (auto& f : p_.functions) check_function(f);
  }

 private:
  void error(const Span& s, std::string msg, const char* code) {
    diags_.push_back({Severity::Error, s, std::move(msg), code});
  }

  const VarInfo* lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return &f->second;
    }
    return nullptr;
  }

  int declare(const std::string& name, Type t, const Span& span) {
    if (lookup(name))
      error(span, "redeclaration of '" + name + "'", "redeclared");
    int slot = static_cast<int>(fn_->slot_types.size());
    fn_->slot_types.push_back(t);
    scopes_.back()[name] = VarInfo{t, slot};
    return slot;
  }

  void check_function(Function& f) {
    fn_ = &f;
    f.slot_types.clear();
    scopes_.assign(1, {});
    loop_depth_ = 0;
    case_depth_.clear();
    for (const auto& prm : f.params) {
      if (prm.type.is_void() || (prm.type.array && prm.type.base == Scalar::Void))
        error(prm.span, "parameter '" + prm.name + "' has void type", "type-mismatch");
      declare(prm.name, prm.type, prm.span);
    }
    check_list(f.body, false);
    if (!f.return_type.is_void() && !always_returns(f.body))
      error(f.span, "function '" + f.name + "' may end without returning a value",
            "missing-return");
    scopes_.clear();
  }

  void check_list(std::vector<Stmt>& list, bool new_scope) {
    if (new_scope) scopes_.emplace_back();
    for (auto& s : list) check_stmt(s);
    if (new_scope) scopes_.pop_back();
  }

  void require_bool(Expr& e) {
    auto t = check_expr(e, std::nullopt);
    if (t && !(*t == Type::scalar(Scalar::Bool)))
      error(e.span, "condition must be bool, found " + to_string(*t),
            "bad-condition");
  }

  void check_store(const Span& span, Type to, Expr& value) {
    auto t = check_expr(value, to);
    if (!t) return;
    if (!assignable(to, *t)) {
      bool narrowing = to.is_numeric() && t->is_numeric();
      error(span,
            "cannot store " + to_string(*t) + " into " + to_string(to) +
                (narrowing ? " (implicit narrowing)" : ""),
            narrowing ? "narrowing" : "type-mismatch");
    }
  }

  void check_stmt(Stmt& s) {
    switch (s.kind) {
      case StmtKind::VarDecl: {
        if (s.decl_type.base == Scalar::Void || s.decl_type.base == Scalar::Comparer)
          error(s.span, "variable '" + s.name + "' has no storable type",
                "type-mismatch");
        if (s.expr) check_store(s.expr->span, s.decl_type, *s.expr);
        s.slot = declare(s.name, s.decl_type, s.span);
        break;
      }
      case StmtKind::Assign: {
        auto tt = check_lvalue(*s.target);
        if (!tt) {
          check_expr(*s.expr, std::nullopt);
          break;
        }
        if (s.assign_op == AssignOp::Set) {
          check_store(s.expr->span, *tt, *s.expr);
        } else {
          auto vt = check_expr(*s.expr, std::nullopt);
          if (!vt) break;
          auto op = *compound_operator(s.assign_op);
          auto rt = arithmetic_result(op, *tt, *vt, s.span);
          if (rt && !assignable(*tt, *rt))
            error(s.span,
                  "compound assignment produces " + to_string(*rt) +
                      " which narrows into " + to_string(*tt),
                  "narrowing");
        }
        break;
      }
      case StmtKind::If:
        require_bool(*s.expr);
        check_list(s.body, true);
        if (s.has_else) check_list(s.else_body, true);
        break;
      case StmtKind::While:
        require_bool(*s.expr);
        ++loop_depth_;
        check_list(s.body, true);
        --loop_depth_;
        break;
      case StmtKind::For:
        scopes_.emplace_back();
        for (auto& i : s.init) check_stmt(i);
        if (s.expr) require_bool(*s.expr);
        for (auto& st : s.step) {
          if (st.kind != StmtKind::Assign)
            error(st.span, "for-loop step must be an assignment", "syntax");
          check_stmt(st);
        }
        ++loop_depth_;
        check_list(s.body, true);
        --loop_depth_;
        scopes_.pop_back();
        break;
      case StmtKind::Switch:
        check_switch(s);
        break;
      case StmtKind::Break:
      case StmtKind::Continue:
        if (loop_depth_ == 0) {
          error(s.span, std::string(s.kind == StmtKind::Break ? "break" : "continue") +
                            " outside of a loop", "misplaced-jump");
        } else if (s.kind == StmtKind::Break && !case_depth_.empty() &&
                   case_depth_.back() == loop_depth_) {
          error(s.span,
                "break inside a switch case; cases never fall through, so the "
                "break would leave the enclosing loop",
                "break-in-case");
        }
        break;
      case StmtKind::Return: {
        Type rt = fn_->return_type;
        if (rt.is_void()) {
          if (s.expr) {
            check_expr(*s.expr, std::nullopt);
            error(s.span, "void function returns a value", "type-mismatch");
          }
        } else if (!s.expr) {
          error(s.span, "missing return value", "type-mismatch");
        } else {
          check_store(s.expr->span, rt, *s.expr);
        }
        break;
      }
      case StmtKind::ExprStmt:
        if (s.expr->kind != ExprKind::Call)
          error(s.span, "expression statement must be a call", "type-mismatch");
        check_expr(*s.expr, std::nullopt);
        break;
      case StmtKind::Block:
        check_list(s.body, true);
        break;
    }
  }

  void check_switch(Stmt& s) {
    auto t = check_expr(*s.expr, std::nullopt);
    bool is_char = t && *t == Type::scalar(Scalar::Char);
    if (t && !t->is_integral() && !is_char)
      error(s.expr->span, "switch scrutinee must be int, long or char",
            "bad-switch");
    std::set<std::pair<int, std::int64_t>> seen;
    for (auto& c : s.cases) {
      bool label_char = c.label.type == Scalar::Char;
      if (t && label_char != is_char)
        error(c.span, "case label type does not match the scrutinee",
              "type-mismatch");
      if (!seen.insert({label_char ? 1 : 0, c.label.int_value}).second)
        error(c.span, "duplicate case label", "duplicate-case");
      if (c.body.empty())
        error(c.span,
              "empty case body: cases cannot fall through to the next label",
              "fallthrough");
      case_depth_.push_back(loop_depth_);
      check_list(c.body, true);
      case_depth_.pop_back();
    }
    if (s.default_body) {
      case_depth_.push_back(loop_depth_);
      check_list(*s.default_body, true);
      case_depth_.pop_back();
    }
  }

  std::optional<Type> check_lvalue(Expr& e) {
    if (e.kind == ExprKind::Var) return check_expr(e, std::nullopt);
    if (e.kind == ExprKind::Index) return check_expr(e, std::nullopt);
    error(e.span, "not assignable", "type-mismatch");
    return std::nullopt;
  }

  std::optional<Type> arithmetic_result(BinaryOp op, Type a, Type b,
                                        const Span& span) {
    if (a.is_integral() && b.is_integral()) {
      return Type::scalar(a.base == Scalar::Long || b.base == Scalar::Long
                              ? Scalar::Long
                              : Scalar::Int);
    }
    if (a.is_floating() && b.is_floating() && op != BinaryOp::Mod) {
      return Type::scalar(a.base == Scalar::Double || b.base == Scalar::Double
                              ? Scalar::Double
                              : Scalar::Float);
    }
    error(span,
          std::string("operator '") + spelling(op) + "' cannot combine " +
              to_string(a) + " and " + to_string(b),
          "type-mismatch");
    return std::nullopt;
  }

  std::optional<Type> check_expr(Expr& e, std::optional<Type> expected) {
    auto t = check_expr_inner(e, expected);
    if (t) e.type = *t;
    return t;
  }

  std::optional<Type> check_expr_inner(Expr& e, std::optional<Type> expected) {
    switch (e.kind) {
      case ExprKind::Literal:
        if (e.literal.type == Scalar::Comparer) {
          error(e.span, "ASC/DESC may only be passed to Sort", "type-mismatch");
          return std::nullopt;
        }
        return Type::scalar(e.literal.type);
      case ExprKind::Var: {
        const VarInfo* v = lookup(e.name);
        if (!v) {
          error(e.span, "use of undeclared variable '" + e.name + "'",
                "undeclared");
          return std::nullopt;
        }
        e.slot = v->slot;
        return v->type;
      }
      case ExprKind::Unary: {
        auto t = check_expr(e.operands[0], std::nullopt);
        if (!t) return std::nullopt;
        if (e.unary_op == UnaryOp::Neg) {
          if (!t->is_numeric()) {
            error(e.span, "unary '-' needs a numeric operand", "type-mismatch");
            return std::nullopt;
          }
          return t;
        }
        if (!(*t == Type::scalar(Scalar::Bool))) {
          error(e.span, "'!' needs a bool operand", "type-mismatch");
          return std::nullopt;
        }
        return t;
      }
      case ExprKind::Binary: {
        auto a = check_expr(e.operands[0], std::nullopt);
        auto b = check_expr(e.operands[1], std::nullopt);
        if (!a || !b) return std::nullopt;
        BinaryOp op = e.binary_op;
        if (is_arithmetic(op)) return arithmetic_result(op, *a, *b, e.span);
        const Type boolean = Type::scalar(Scalar::Bool);
        if (is_logical(op)) {
          if (!(*a == boolean) || !(*b == boolean)) {
            error(e.span, std::string("'") + spelling(op) + "' needs bool operands",
                  "type-mismatch");
            return std::nullopt;
          }
          return boolean;
        }
        bool ok = (a->is_integral() && b->is_integral()) ||
                  (a->is_floating() && b->is_floating()) ||
                  (*a == *b && !a->array && a->base == Scalar::Char);
        if (!ok && (op == BinaryOp::Eq || op == BinaryOp::Ne))
          ok = *a == *b && !a->array &&
               (a->base == Scalar::Bool || a->base == Scalar::String);
        if (!ok) {
          error(e.span,
                std::string("cannot compare ") + to_string(*a) + " and " +
                    to_string(*b),
                "type-mismatch");
          return std::nullopt;
        }
        return boolean;
      }
      case ExprKind::Index: {
        auto a = check_expr(e.operands[0], std::nullopt);
        auto i = check_expr(e.operands[1], std::nullopt);
        if (!a || !i) return std::nullopt;
        if (!a->array) {
          error(e.operands[0].span, "indexing a non-array", "bad-index");
          return std::nullopt;
        }
        if (!i->is_integral()) {
          error(e.operands[1].span, "array index must be int or long",
                "bad-index");
          return std::nullopt;
        }
        return a->element();
      }
      case ExprKind::ArrayLit: {
        std::optional<Type> elem;
        if (expected && expected->array) elem = expected->element();
        if (!elem && e.operands.empty()) {
          error(e.span, "empty array literal needs a declared array type",
                "type-mismatch");
          return std::nullopt;
        }
        bool ok = true;
        for (auto& o : e.operands) {
          auto t = check_expr(o, elem);
          if (!t) {
            ok = false;
            continue;
          }
          if (t->array) {
            error(o.span, "nested arrays are not supported", "type-mismatch");
            ok = false;
            continue;
          }
          if (!elem) {
            elem = t;
          } else if (!assignable(*elem, *t)) {
            error(o.span,
                  "array element of type " + to_string(*t) +
                      " does not fit " + to_string(*elem),
                  "type-mismatch");
            ok = false;
          }
        }
        if (!ok) return std::nullopt;
        return Type::array_of(elem->base);
      }
      case ExprKind::Call:
        return check_call(e);
    }
    return std::nullopt;
  }

  std::optional<Type> check_call(Expr& e) {
    auto fi = function_index_.find(e.name);
    if (fi != function_index_.end()) {
      e.slot = fi->second;
      const Function& callee = p_.functions[static_cast<std::size_t>(fi->second)];
      if (callee.params.size() != e.operands.size()) {
        error(e.span,
              "'" + e.name + "' expects " + std::to_string(callee.params.size()) +
                  " argument(s)",
              "bad-call");
        for (auto& o : e.operands) check_expr(o, std::nullopt);
        return std::nullopt;
      }
      for (std::size_t i = 0; i < e.operands.size(); ++i)
        check_store(e.operands[i].span, callee.params[i].type, e.operands[i]);
      return callee.return_type;
    }
    auto b = find_builtin(e.name);
    if (!b) {
      error(e.span, "call to unknown function '" + e.name + "'", "bad-call");
      for (auto& o : e.operands) check_expr(o, std::nullopt);
      return std::nullopt;
    }
    e.slot = -(static_cast<int>(b->id) + 2);
    auto bad = [&](const std::string& msg) -> std::optional<Type> {
      error(e.span, e.name + ": " + msg, "bad-call");
      return std::nullopt;
    };
    auto& args = e.operands;
    std::vector<std::optional<Type>> ts;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (b->id == BuiltinId::Sort && i == 1 &&
          args[i].kind == ExprKind::Literal &&
          args[i].literal.type == Scalar::Comparer) {
        args[i].type = Type::scalar(Scalar::Comparer);
        ts.push_back(args[i].type);
        continue;
      }
      ts.push_back(check_expr(args[i], std::nullopt));
    }
    for (const auto& t : ts)
      if (!t) return std::nullopt;
    auto arity = [&](std::size_t n) { return args.size() == n; };
    auto sortable = [](Type t) {
      return t.array && (t.base == Scalar::Int || t.base == Scalar::Long ||
                         t.base == Scalar::Float || t.base == Scalar::Double ||
                         t.base == Scalar::Char);
    };
    const Type char_t = Type::scalar(Scalar::Char);
    switch (b->id) {
      case BuiltinId::Sort:
        if (!(arity(1) || arity(2)) || !sortable(*ts[0]))
          return bad("expects (array) or (array, ASC|DESC)");
        if (arity(2) && !(*ts[1] == Type::scalar(Scalar::Comparer)))
          return bad("second argument must be ASC or DESC");
        return Type::scalar(Scalar::Void);
      case BuiltinId::Min:
      case BuiltinId::Max:
        if (!arity(1) || !sortable(*ts[0])) return bad("expects one array");
        return ts[0]->element();
      case BuiltinId::Length:
        if (!arity(1) || !ts[0]->array) return bad("expects one array");
        return Type::scalar(Scalar::Int);
      case BuiltinId::ElementAt:
        if (!arity(2) || !ts[0]->array || !ts[1]->is_integral())
          return bad("expects (array, index)");
        return ts[0]->element();
      case BuiltinId::GetNumericValue:
      case BuiltinId::ToInt:
        if (!arity(1) || !(*ts[0] == char_t)) return bad("expects one char");
        return Type::scalar(Scalar::Int);
      case BuiltinId::Print:
        if (!arity(1) || ts[0]->is_void()) return bad("expects one value");
        return Type::scalar(Scalar::Void);
    }
    return std::nullopt;
  }

  Program& p_;
  Diagnostics& diags_;
  Function* fn_ = nullptr;
  std::vector<std::unordered_map<std::string, VarInfo>> scopes_;
  std::unordered_map<std::string, int> function_index_;
  int loop_depth_ = 0;
  std::vector<int> case_depth_;  // loop depth at each enclosing case
};

}  // namespace

bool always_returns(const std::vector<Stmt>& body) {
  for (const auto& s : body)
    if (stmt_returns(s)) return true;
  return false;
}

Diagnostics validate(const Program& p) {
  Program copy = p;
  Diagnostics diags;
  Checker(copy, diags).run();
  return diags;
}

void annotate(Program& p) {
  Diagnostics diags;
  Checker(p, diags).run();
  if (!diags.empty()) throw SourceError(format(diags), diags);
}

}  // namespace coset::lang
