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

// Constant and copy propagation with folding.
//
// Facts map a variable to a constant or to another variable holding the same
// value. Loops kill every variable they write before their condition is
// analysed, so no fact crosses a back edge; branches meet by intersection.
// Substitution only happens where a variable is an operand (of an operator,
// an index or a compound assignment) or a whole condition.

#include <cmath>
#include <map>

#include "common.hpp"
#include "coset/interp/value.hpp"
#include "coset/lang/printer.hpp"

namespace coset::transforms {

using namespace detail;
using interp::Value;
using lang::BinaryOp;
using lang::Literal;
using lang::Scalar;
using lang::Type;

namespace {

struct Fact {
  std::optional<Value> constant;
  std::string source;  // copy of this variable when `constant` is empty

  friend bool operator==(const Fact& a, const Fact& b) {
    if (a.constant.has_value() != b.constant.has_value()) return false;
    if (a.constant) return *a.constant == *b.constant;
    return a.source == b.source;
  }
};

using Env = std::map<std::string, Fact>;

std::optional<Literal> to_literal(const Value& v) {
  if (v.type.array) return std::nullopt;
  switch (v.type.base) {
    case Scalar::Int: return Literal::of_int(v.i);
    case Scalar::Long: return Literal::of_long(v.i);
    case Scalar::Float: return Literal::of_float(v.f);
    case Scalar::Double: return Literal::of_double(v.f);
    case Scalar::Bool: return Literal::of_bool(v.i != 0);
    case Scalar::Char: return Literal::of_char(static_cast<char>(v.i));
    case Scalar::String: return Literal::of_string(*v.s);
    default: return std::nullopt;
  }
}

void drop(Env& env, const std::string& name) {
  env.erase(name);
  for (auto it = env.begin(); it != env.end();) {
    if (!it->second.constant && it->second.source == name)
      it = env.erase(it);
    else
      ++it;
  }
}

Env meet(const std::vector<Env>& envs) {
  Env out = envs.front();
  for (std::size_t k = 1; k < envs.size(); ++k) {
    for (auto it = out.begin(); it != out.end();) {
      auto f = envs[k].find(it->first);
      if (f == envs[k].end() || !(f->second == it->second))
        it = out.erase(it);
      else
        ++it;
    }
  }
  return out;
}

class Propagator {
 public:
  Propagator(Program& p, std::vector<Edit>& edits) : p_(p), edits_(edits) {}

  void run(Function& f) {
    Env env;
    process_list(f.body, env);
  }

 private:
  void process_list(std::vector<Stmt>& list, Env& env) {
    std::vector<std::string> declared;
    for (auto& s : list) process(s, env, declared);
    for (const auto& n : declared) drop(env, n);
  }

  void record(Env& env, const std::string& name, Type t, const Expr& value) {
    if (t.array) return;
    if (value.kind == ExprKind::Literal &&
        value.literal.type != Scalar::Comparer) {
      env[name] = Fact{interp::convert(Value::from_literal(value.literal), t), ""};
    } else if (value.kind == ExprKind::Var && value.name != name &&
               value.type == t) {
      env[name] = Fact{std::nullopt, value.name};
    }
  }

  void kill_writes(Env& env, const Stmt& s) {
    std::set<std::string> w;
    collect_writes(s, w);
    for (const auto& n : w) drop(env, n);
  }

  void process(Stmt& s, Env& env, std::vector<std::string>& declared) {
    switch (s.kind) {
      case StmtKind::VarDecl:
        if (s.expr) rewrite_top(*s.expr, env, false);
        drop(env, s.name);
        declared.push_back(s.name);
        if (s.expr) record(env, s.name, s.decl_type, *s.expr);
        break;
      case StmtKind::Assign: {
        Expr& t = *s.target;
        bool compound = s.assign_op != lang::AssignOp::Set;
        if (t.kind == ExprKind::Index) {
          rewrite_top(t.operands[1], env, true);
          rewrite_top(*s.expr, env, compound);
          break;
        }
        std::optional<Fact> before;
        if (auto it = env.find(t.name); it != env.end()) before = it->second;
        rewrite_top(*s.expr, env, compound);
        drop(env, t.name);
        if (!compound) {
          record(env, t.name, t.type, *s.expr);
        } else if (before && before->constant && s.expr->kind == ExprKind::Literal) {
          auto v = interp::apply_binary(*lang::compound_operator(s.assign_op),
                                        *before->constant,
                                        Value::from_literal(s.expr->literal),
                                        s.expr->type.is_floating() || t.type.is_floating()
                                            ? t.type
                                            : (t.type.base == Scalar::Long ||
                                                       s.expr->type.base == Scalar::Long
                                                   ? Type::scalar(Scalar::Long)
                                                   : Type::scalar(Scalar::Int)));
          if (v && (!v->type.is_floating() || std::isfinite(v->f)))
            env[t.name] = Fact{interp::convert(*v, t.type), ""};
        }
        break;
      }
      case StmtKind::If: {
        rewrite_top(*s.expr, env, true);
        Env then_env = env;
        process_list(s.body, then_env);
        Env else_env = env;
        process_list(s.else_body, else_env);
        env = meet({then_env, else_env});
        break;
      }
      case StmtKind::While: {
        kill_writes(env, s);
        rewrite_top(*s.expr, env, true);
        Env body = env;
        process_list(s.body, body);
        break;
      }
      case StmtKind::For: {
        std::vector<std::string> loop_scope;
        for (auto& i : s.init) process(i, env, loop_scope);
        kill_writes(env, s);
        if (s.expr) rewrite_top(*s.expr, env, true);
        Env body = env;
        process_list(s.body, body);
        Env step = env;
        std::vector<std::string> unused;
        for (auto& st : s.step) process(st, step, unused);
        for (const auto& n : loop_scope) drop(env, n);
        break;
      }
      case StmtKind::Switch: {
        rewrite_top(*s.expr, env, true);
        std::vector<Env> outs;
        for (auto& c : s.cases) {
          Env e = env;
          process_list(c.body, e);
          outs.push_back(std::move(e));
        }
        if (s.default_body) {
          Env e = env;
          process_list(*s.default_body, e);
          outs.push_back(std::move(e));
        } else {
          outs.push_back(env);
        }
        env = meet(outs);
        break;
      }
      case StmtKind::Return:
      case StmtKind::ExprStmt:
        if (s.expr) rewrite_top(*s.expr, env, false);
        break;
      case StmtKind::Block:
        process_list(s.body, env);
        break;
      case StmtKind::Break:
      case StmtKind::Continue:
        break;
    }
  }

  void rewrite_top(Expr& e, const Env& env, bool operand) {
    Expr before = e;
    rewrite(e, env, operand);
    if (!(before == e)) {
      edits_.push_back({before.span, before.id,
                        "propagate: " + lang::print(before) + " -> " + lang::print(e)});
    }
  }

  void rewrite(Expr& e, const Env& env, bool operand) {
    switch (e.kind) {
      case ExprKind::Var: {
        if (!operand) return;
        auto it = env.find(e.name);
        if (it == env.end()) return;
        if (it->second.constant) {
          auto lit = to_literal(*it->second.constant);
          if (!lit) return;
          Type t = e.type;
          Expr r = Expr::make_literal(*lit);
          r.span = e.span;
          r.id = p_.fresh_id();
          r.type = t;
          e = std::move(r);
        } else {
          e.name = it->second.source;
        }
        return;
      }
      case ExprKind::Unary:
      case ExprKind::Binary:
        for (auto& o : e.operands) rewrite(o, env, true);
        fold(e);
        return;
      case ExprKind::Index:
        rewrite(e.operands[1], env, true);
        return;
      case ExprKind::Call:
      case ExprKind::ArrayLit:
        for (auto& o : e.operands) rewrite(o, env, false);
        return;
      case ExprKind::Literal:
        return;
    }
  }

  void fold(Expr& e) {
    for (const auto& o : e.operands)
      if (o.kind != ExprKind::Literal) return;
    std::optional<Value> v;
    if (e.kind == ExprKind::Unary) {
      v = interp::apply_unary(e.unary_op, Value::from_literal(e.operands[0].literal));
    } else if (lang::is_logical(e.binary_op)) {
      bool a = e.operands[0].literal.bool_value;
      bool b = e.operands[1].literal.bool_value;
      v = Value::of_bool(e.binary_op == BinaryOp::And ? a && b : a || b);
    } else {
      v = interp::apply_binary(e.binary_op,
                               Value::from_literal(e.operands[0].literal),
                               Value::from_literal(e.operands[1].literal), e.type);
    }
    if (!v) return;
    if (v->type.is_floating() && !std::isfinite(v->f)) return;
    auto lit = to_literal(*v);
    if (!lit) return;
    Expr r = Expr::make_literal(*lit);
    r.span = e.span;
    r.id = p_.fresh_id();
    r.type = v->type;
    e = std::move(r);
  }

  Program& p_;
  std::vector<Edit>& edits_;
};

}  // namespace

TransformResult cvp(const Program& p) {
  Program out = prepare(p);
  std::vector<Edit> edits;
  Propagator prop(out, edits);
  for (auto& f : out.functions) prop.run(f);
  return finish(p, std::move(out), std::move(edits));
}

}  // namespace coset::transforms
