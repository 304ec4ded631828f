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

#include "coset/lang/ast.hpp"

namespace coset::lang {

std::string to_string(Scalar s) {
  switch (s) {
    case Scalar::Void: return "void";
    case Scalar::Int: return "int";
    case Scalar::Long: return "long";
    case Scalar::Float: return "float";
    case Scalar::Double: return "double";
    case Scalar::Bool: return "bool";
    case Scalar::Char: return "char";
    case Scalar::String: return "string";
    case Scalar::Comparer: return "comparer";
  }
  return "?";
}

std::string to_string(Type t) {
  return t.array ? to_string(t.base) + "[]" : to_string(t.base);
}

Literal Literal::of_float(double v) {
  Literal l;
  l.type = Scalar::Float;
  l.float_value = static_cast<double>(static_cast<float>(v));
  return l;
}

Literal Literal::of_double(double v) {
  Literal l;
  l.type = Scalar::Double;
  l.float_value = v;
  return l;
}

bool operator==(const Literal& a, const Literal& b) {
  if (a.type != b.type) return false;
  switch (a.type) {
    case Scalar::Float:
    case Scalar::Double:
      return a.float_value == b.float_value;
    case Scalar::Bool:
      return a.bool_value == b.bool_value;
    case Scalar::String:
      return a.string_value == b.string_value;
    default:
      return a.int_value == b.int_value;
  }
}

const char* spelling(UnaryOp op) { return op == UnaryOp::Neg ? "-" : "!"; }

const char* spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

bool is_comparison(BinaryOp op) {
  return op >= BinaryOp::Lt && op <= BinaryOp::Ne;
}
bool is_arithmetic(BinaryOp op) { return op <= BinaryOp::Mod; }
bool is_logical(BinaryOp op) {
  return op == BinaryOp::And || op == BinaryOp::Or;
}

const char* spelling(AssignOp op) {
  switch (op) {
    case AssignOp::Set: return "=";
    case AssignOp::Add: return "+=";
    case AssignOp::Sub: return "-=";
    case AssignOp::Mul: return "*=";
    case AssignOp::Div: return "/=";
    case AssignOp::Mod: return "%=";
  }
  return "?";
}

std::optional<BinaryOp> compound_operator(AssignOp op) {
  switch (op) {
    case AssignOp::Set: return std::nullopt;
    case AssignOp::Add: return BinaryOp::Add;
    case AssignOp::Sub: return BinaryOp::Sub;
    case AssignOp::Mul: return BinaryOp::Mul;
    case AssignOp::Div: return BinaryOp::Div;
    case AssignOp::Mod: return BinaryOp::Mod;
  }
  return std::nullopt;
}

Expr Expr::make_literal(Literal lit) {
  Expr e;
  e.kind = ExprKind::Literal;
  e.literal = std::move(lit);
  return e;
}

Expr Expr::make_var(std::string name) {
  Expr e;
  e.kind = ExprKind::Var;
  e.name = std::move(name);
  return e;
}

Expr Expr::make_unary(UnaryOp op, Expr operand) {
  Expr e;
  e.kind = ExprKind::Unary;
  e.unary_op = op;
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::make_binary(BinaryOp op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = ExprKind::Binary;
  e.binary_op = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

Expr Expr::make_index(Expr array, Expr index) {
  Expr e;
  e.kind = ExprKind::Index;
  e.operands.push_back(std::move(array));
  e.operands.push_back(std::move(index));
  return e;
}

Expr Expr::make_call(std::string name, std::vector<Expr> args) {
  Expr e;
  e.kind = ExprKind::Call;
  e.name = std::move(name);
  e.operands = std::move(args);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Literal:
      return a.literal == b.literal;
    case ExprKind::Var:
      return a.name == b.name;
    case ExprKind::Unary:
      return a.unary_op == b.unary_op && a.operands == b.operands;
    case ExprKind::Binary:
      return a.binary_op == b.binary_op && a.operands == b.operands;
    case ExprKind::Index:
    case ExprKind::ArrayLit:
      return a.operands == b.operands;
    case ExprKind::Call:
      return a.name == b.name && a.operands == b.operands;
  }
  return false;
}

bool operator==(const SwitchCase& a, const SwitchCase& b) {
  return a.label == b.label && a.body == b.body;
}

bool operator==(const Stmt& a, const Stmt& b) {
  return a.kind == b.kind && a.decl_type == b.decl_type && a.name == b.name &&
         a.assign_op == b.assign_op && a.target == b.target &&
         a.expr == b.expr && a.body == b.body && a.else_body == b.else_body &&
         a.has_else == b.has_else && a.init == b.init && a.step == b.step &&
         a.cases == b.cases && a.default_body == b.default_body;
}

Stmt Stmt::make_decl(Type type, std::string name, std::optional<Expr> init) {
  Stmt s;
  s.kind = StmtKind::VarDecl;
  s.decl_type = type;
  s.name = std::move(name);
  s.expr = std::move(init);
  return s;
}

Stmt Stmt::make_assign(Expr target, AssignOp op, Expr value) {
  Stmt s;
  s.kind = StmtKind::Assign;
  s.target = std::move(target);
  s.assign_op = op;
  s.expr = std::move(value);
  return s;
}

Stmt Stmt::make_if(Expr cond, std::vector<Stmt> then_body) {
  Stmt s;
  s.kind = StmtKind::If;
  s.expr = std::move(cond);
  s.body = std::move(then_body);
  return s;
}

Stmt Stmt::make_if_else(Expr cond, std::vector<Stmt> then_body,
                        std::vector<Stmt> else_body) {
  Stmt s = make_if(std::move(cond), std::move(then_body));
  s.else_body = std::move(else_body);
  s.has_else = true;
  return s;
}

Stmt Stmt::make_while(Expr cond, std::vector<Stmt> body) {
  Stmt s;
  s.kind = StmtKind::While;
  s.expr = std::move(cond);
  s.body = std::move(body);
  return s;
}

Stmt Stmt::make_break() {
  Stmt s;
  s.kind = StmtKind::Break;
  return s;
}

Stmt Stmt::make_continue() {
  Stmt s;
  s.kind = StmtKind::Continue;
  return s;
}

Stmt Stmt::make_return(std::optional<Expr> value) {
  Stmt s;
  s.kind = StmtKind::Return;
  s.expr = std::move(value);
  return s;
}

Stmt Stmt::make_expr(Expr e) {
  Stmt s;
  s.kind = StmtKind::ExprStmt;
  s.expr = std::move(e);
  return s;
}

Stmt Stmt::make_block(std::vector<Stmt> body) {
  Stmt s;
  s.kind = StmtKind::Block;
  s.body = std::move(body);
  return s;
}

const Function* Program::find(std::string_view name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

void Program::renumber(Expr& e) {
  e.id = fresh_id();
  for (auto& o : e.operands) renumber(o);
}

void Program::renumber(Stmt& s) {
  s.id = fresh_id();
  if (s.target) renumber(*s.target);
  if (s.expr) renumber(*s.expr);
  for (auto& c : s.body) renumber(c);
  for (auto& c : s.else_body) renumber(c);
  for (auto& c : s.init) renumber(c);
  for (auto& c : s.step) renumber(c);
  for (auto& sc : s.cases)
    for (auto& c : sc.body) renumber(c);
  if (s.default_body)
    for (auto& c : *s.default_body) renumber(c);
}

}  // namespace coset::lang
