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

/// \file
/// Abstract syntax tree for MiniLang, a small C-family language.
///
/// Nodes are plain values: every node owns its children, copying a node
/// copies the subtree, and `==` compares structure only (spans, node ids and
/// the annotations written by sema are ignored). Transformation passes work
/// on copies and return new programs.
///
/// Statement bodies of `if`, `while`, `for` and `case` are always stored as
/// statement lists; the parser wraps a single-statement body into a list so
/// that printing with braces and reparsing gives back the same tree.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coset::lang {

using NodeId = std::uint32_t;

struct Span {
  std::uint32_t offset = 0;
  std::uint32_t length = 0;
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  std::uint32_t end() const { return offset + length; }
  bool contains(const Span& other) const {
    return other.offset >= offset && other.end() <= end();
  }
  bool overlaps(const Span& other) const {
    return offset < other.end() && other.offset < end();
  }
};

enum class Scalar : std::uint8_t {
  Void,
  Int,
  Long,
  Float,
  Double,
  Bool,
  Char,
  String,
  Comparer,  // type of the ASC / DESC constants, not declarable
};

struct Type {
  Scalar base = Scalar::Void;
  bool array = false;

  static Type scalar(Scalar s) { return Type{s, false}; }
  static Type array_of(Scalar s) { return Type{s, true}; }

  bool is_void() const { return base == Scalar::Void && !array; }
  bool is_integral() const {
    return !array && (base == Scalar::Int || base == Scalar::Long);
  }
  bool is_floating() const {
    return !array && (base == Scalar::Float || base == Scalar::Double);
  }
  bool is_numeric() const { return is_integral() || is_floating(); }
  Type element() const { return Type{base, false}; }

  friend bool operator==(const Type&, const Type&) = default;
};

std::string to_string(Scalar s);
std::string to_string(Type t);

/// Literal payload. Integral and char literals use `int_value`, floating
/// literals `float_value` (already rounded to float precision for `float`),
/// comparers use `int_value` 0 = ASC, 1 = DESC.
struct Literal {
  Scalar type = Scalar::Int;
  std::int64_t int_value = 0;
  double float_value = 0.0;
  bool bool_value = false;
  std::string string_value;

  static Literal of_int(std::int64_t v) { return integral(Scalar::Int, v); }
  static Literal of_long(std::int64_t v) { return integral(Scalar::Long, v); }
  static Literal of_bool(bool b) {
    Literal l;
    l.type = Scalar::Bool;
    l.bool_value = b;
    return l;
  }
  static Literal of_float(double v);
  static Literal of_double(double v);
  static Literal of_char(char c) { return integral(Scalar::Char, c); }
  static Literal integral(Scalar type, std::int64_t v) {
    Literal l;
    l.type = type;
    l.int_value = v;
    return l;
  }
  static Literal of_string(std::string s) {
    Literal l;
    l.type = Scalar::String;
    l.string_value = std::move(s);
    return l;
  }

  friend bool operator==(const Literal& a, const Literal& b);
};

enum class UnaryOp : std::uint8_t { Neg, Not };

enum class BinaryOp : std::uint8_t {
  Add, Sub, Mul, Div, Mod,
  Lt, Le, Gt, Ge, Eq, Ne,
  And, Or,
};

const char* spelling(UnaryOp op);
const char* spelling(BinaryOp op);
bool is_comparison(BinaryOp op);
bool is_arithmetic(BinaryOp op);
bool is_logical(BinaryOp op);

enum class ExprKind : std::uint8_t {
  Literal,
  Var,
  Unary,
  Binary,
  Index,     // operands: [array, index]
  ArrayLit,  // operands: elements
  Call,      // name + operands as arguments
};

struct Expr {
  ExprKind kind = ExprKind::Literal;
  Span span;
  NodeId id = 0;

  Literal literal;
  std::string name;
  UnaryOp unary_op = UnaryOp::Neg;
  BinaryOp binary_op = BinaryOp::Add;
  std::vector<Expr> operands;

  // Written by sema::annotate; not part of structural equality. For Var,
  // `slot` is the frame slot; for Call it is the callee's function index, or
  // -(builtin id + 2) for builtins.
  Type type;
  int slot = -1;

  static Expr make_literal(Literal lit);
  static Expr make_var(std::string name);
  static Expr make_unary(UnaryOp op, Expr operand);
  static Expr make_binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr make_index(Expr array, Expr index);
  static Expr make_call(std::string name, std::vector<Expr> args);

  friend bool operator==(const Expr& a, const Expr& b);
};

enum class StmtKind : std::uint8_t {
  VarDecl,
  Assign,
  If,
  Switch,
  While,
  For,
  Break,
  Continue,
  Return,
  ExprStmt,
  Block,
};

enum class AssignOp : std::uint8_t { Set, Add, Sub, Mul, Div, Mod };

const char* spelling(AssignOp op);
/// The binary operator a compound assignment applies (`+=` -> Add).
std::optional<BinaryOp> compound_operator(AssignOp op);

struct Stmt;

struct SwitchCase {
  Literal label;
  Span span;
  std::vector<Stmt> body;

  friend bool operator==(const SwitchCase& a, const SwitchCase& b);
};

struct Stmt {
  StmtKind kind = StmtKind::Block;
  Span span;
  NodeId id = 0;

  // VarDecl
  Type decl_type;
  std::string name;
  // Assign
  AssignOp assign_op = AssignOp::Set;
  std::optional<Expr> target;

  // VarDecl initializer, Assign value, If/While/For/Switch condition,
  // Return value, ExprStmt expression.
  std::optional<Expr> expr;

  std::vector<Stmt> body;       // Block, If-then, While, For, or empty
  std::vector<Stmt> else_body;  // If
  bool has_else = false;
  std::vector<Stmt> init;       // For: zero or one statement
  std::vector<Stmt> step;       // For: zero or one statement
  std::vector<SwitchCase> cases;
  std::optional<std::vector<Stmt>> default_body;

  int slot = -1;  // VarDecl, written by sema::annotate

  static Stmt make_decl(Type type, std::string name, std::optional<Expr> init);
  static Stmt make_assign(Expr target, AssignOp op, Expr value);
  static Stmt make_if(Expr cond, std::vector<Stmt> then_body);
  static Stmt make_if_else(Expr cond, std::vector<Stmt> then_body,
                           std::vector<Stmt> else_body);
  static Stmt make_while(Expr cond, std::vector<Stmt> body);
  static Stmt make_break();
  static Stmt make_continue();
  static Stmt make_return(std::optional<Expr> value);
  static Stmt make_expr(Expr e);
  static Stmt make_block(std::vector<Stmt> body);

  bool is_loop() const {
    return kind == StmtKind::While || kind == StmtKind::For;
  }

  friend bool operator==(const Stmt& a, const Stmt& b);
};

struct Param {
  Type type;
  std::string name;
  Span span;
  NodeId id = 0;

  friend bool operator==(const Param& a, const Param& b) {
    return a.type == b.type && a.name == b.name;
  }
};

struct Function {
  Type return_type;
  std::string name;
  std::vector<Param> params;
  std::vector<Stmt> body;
  Span span;
  NodeId id = 0;

  // Written by sema::annotate: parameters take slots 0..n-1, then every
  // declaration in source order gets the next slot.
  std::vector<Type> slot_types;

  friend bool operator==(const Function& a, const Function& b) {
    return a.return_type == b.return_type && a.name == b.name &&
           a.params == b.params && a.body == b.body;
  }
};

/// A compilation unit. The first function is the entry point.
struct Program {
  std::vector<Function> functions;
  std::string source;  // text the program was parsed from, if any
  NodeId next_id = 1;

  const Function& entry() const { return functions.front(); }
  Function& entry() { return functions.front(); }
  const Function* find(std::string_view name) const;

  NodeId fresh_id() { return next_id++; }
  /// Gives every node of `s` (recursively) a new id.
  void renumber(Stmt& s);
  void renumber(Expr& e);

  friend bool operator==(const Program& a, const Program& b) {
    return a.functions == b.functions;
  }
};

/// Pre-order visit of every statement in a statement list, including those
/// nested in control structures. The callback may not modify the tree.
template <typename F>
void visit_stmts(const std::vector<Stmt>& list, F&& f);

template <typename F>
void visit_stmts(const Stmt& s, F&& f) {
  f(s);
  for (const auto& c : s.init) visit_stmts(c, f);
  for (const auto& c : s.step) visit_stmts(c, f);
  for (const auto& c : s.body) visit_stmts(c, f);
  for (const auto& c : s.else_body) visit_stmts(c, f);
  for (const auto& sc : s.cases)
    for (const auto& c : sc.body) visit_stmts(c, f);
  if (s.default_body)
    for (const auto& c : *s.default_body) visit_stmts(c, f);
}

template <typename F>
void visit_stmts(const std::vector<Stmt>& list, F&& f) {
  for (const auto& s : list) visit_stmts(s, f);
}

/// Pre-order visit of every expression reachable from `e`.
template <typename F>
void visit_exprs(const Expr& e, F&& f) {
  f(e);
  for (const auto& o : e.operands) visit_exprs(o, f);
}

/// Visits every expression directly owned by `s` (not by nested statements).
template <typename F>
void visit_own_exprs(const Stmt& s, F&& f) {
  if (s.target) visit_exprs(*s.target, f);
  if (s.expr) visit_exprs(*s.expr, f);
}

}  // namespace coset::lang
