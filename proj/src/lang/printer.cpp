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

#include "coset/lang/printer.hpp"

#include <cmath>
#include <cstdio>

namespace coset::lang {
namespace {

constexpr int kIndent = 4;

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return 1;
    case BinaryOp::And: return 2;
    case BinaryOp::Eq:
    case BinaryOp::Ne: return 3;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: return 4;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 5;
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: return 6;
  }
  return 0;
}

constexpr int kUnaryPrec = 7;

int expr_prec(const Expr& e) {
  if (e.kind == ExprKind::Binary) return precedence(e.binary_op);
  if (e.kind == ExprKind::Unary) return kUnaryPrec;
  return 8;
}

void escape_char(std::string& out, char c, char quote) {
  switch (c) {
    case '\n': out += "\\n"; break;
    case '\t': out += "\\t"; break;
    case '\r': out += "\\r"; break;
    case '\0': out += "\\0"; break;
    case '\\': out += "\\\\"; break;
    default:
      if (c == quote) {
        out += '\\';
      }
      out += c;
  }
}

std::string format_floating(double v, bool is_float) {
  char buf[64];
  std::snprintf(buf, sizeof buf, is_float ? "%.9g" : "%.17g", v);
  std::string s = buf;
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  if (is_float) s += 'f';
  return s;
}

void print_expr(std::string& out, const Expr& e);

void print_operand(std::string& out, const Expr& e, bool parens) {
  if (parens) out += '(';
  print_expr(out, e);
  if (parens) out += ')';
}

bool starts_with_minus(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Literal:
      if (e.literal.type == Scalar::Int || e.literal.type == Scalar::Long)
        return e.literal.int_value < 0;
      if (e.literal.type == Scalar::Float || e.literal.type == Scalar::Double)
        return std::signbit(e.literal.float_value);
      return false;
    case ExprKind::Unary:
      return e.unary_op == UnaryOp::Neg;
    case ExprKind::Binary:
    case ExprKind::Index:
      return starts_with_minus(e.operands[0]);
    default:
      return false;
  }
}

void print_expr(std::string& out, const Expr& e) {
  switch (e.kind) {
    case ExprKind::Literal:
      out += print(e.literal);
      break;
    case ExprKind::Var:
      out += e.name;
      break;
    case ExprKind::Unary: {
      const Expr& o = e.operands[0];
      out += spelling(e.unary_op);
      // `-5` would reparse as a literal, and `--x` is not a token pair we lex.
      bool parens = expr_prec(o) < kUnaryPrec ||
                    (e.unary_op == UnaryOp::Neg &&
                     (o.kind == ExprKind::Literal || starts_with_minus(o)));
      print_operand(out, o, parens);
      break;
    }
    case ExprKind::Binary: {
      int p = precedence(e.binary_op);
      print_operand(out, e.operands[0], expr_prec(e.operands[0]) < p);
      out += ' ';
      out += spelling(e.binary_op);
      out += ' ';
      print_operand(out, e.operands[1], expr_prec(e.operands[1]) <= p);
      break;
    }
    case ExprKind::Index: {
      const Expr& a = e.operands[0];
      print_operand(out, a, expr_prec(a) <= kUnaryPrec ||
                                (a.kind == ExprKind::Literal));
      out += '[';
      print_expr(out, e.operands[1]);
      out += ']';
      break;
    }
    case ExprKind::ArrayLit:
    case ExprKind::Call: {
      if (e.kind == ExprKind::Call) out += e.name;
      out += e.kind == ExprKind::Call ? '(' : '[';
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i) out += ", ";
        print_expr(out, e.operands[i]);
      }
      out += e.kind == ExprKind::Call ? ')' : ']';
      break;
    }
  }
}

void line(std::string& out, int depth, const std::string& text) {
  out.append(static_cast<std::size_t>(depth * kIndent), ' ');
  out += text;
  out += '\n';
}

// Statement text without indentation or trailing ';' (for-loop headers).
std::string simple(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::VarDecl: {
      std::string t = to_string(s.decl_type) + " " + s.name;
      if (s.expr) t += " = " + print(*s.expr);
      return t;
    }
    case StmtKind::Assign:
      return print(*s.target) + " " + spelling(s.assign_op) + " " +
             print(*s.expr);
    case StmtKind::ExprStmt:
      return print(*s.expr);
    default:
      return "";
  }
}

void print_stmt(std::string& out, const Stmt& s, int depth);

void print_list(std::string& out, const std::vector<Stmt>& list, int depth) {
  for (const auto& s : list) print_stmt(out, s, depth);
}

void print_if(std::string& out, const Stmt& s, int depth, bool chained) {
  std::string head = "if (" + print(*s.expr) + ") {";
  if (chained) {
    out.resize(out.size() - 2);  // drop "}\n" of the previous branch
    out += "} else " + head + "\n";
  } else {
    line(out, depth, head);
  }
  print_list(out, s.body, depth + 1);
  line(out, depth, "}");
  if (!s.has_else) return;
  if (s.else_body.size() == 1 && s.else_body[0].kind == StmtKind::If) {
    print_if(out, s.else_body[0], depth, true);
    return;
  }
  out.resize(out.size() - 2);
  out += "} else {\n";
  print_list(out, s.else_body, depth + 1);
  line(out, depth, "}");
}

void print_stmt(std::string& out, const Stmt& s, int depth) {
  switch (s.kind) {
    case StmtKind::VarDecl:
    case StmtKind::Assign:
    case StmtKind::ExprStmt:
      line(out, depth, simple(s) + ";");
      break;
    case StmtKind::If:
      print_if(out, s, depth, false);
      break;
    case StmtKind::While:
      line(out, depth, "while (" + print(*s.expr) + ") {");
      print_list(out, s.body, depth + 1);
      line(out, depth, "}");
      break;
    case StmtKind::For: {
      std::string head = "for (";
      if (!s.init.empty()) head += simple(s.init[0]);
      head += ";";
      if (s.expr) head += " " + print(*s.expr);
      head += ";";
      if (!s.step.empty()) head += " " + simple(s.step[0]);
      line(out, depth, head + ") {");
      print_list(out, s.body, depth + 1);
      line(out, depth, "}");
      break;
    }
    case StmtKind::Switch:
      line(out, depth, "switch (" + print(*s.expr) + ") {");
      for (const auto& c : s.cases) {
        line(out, depth + 1, "case " + print(c.label) + ":");
        print_list(out, c.body, depth + 2);
      }
      if (s.default_body) {
        line(out, depth + 1, "default:");
        print_list(out, *s.default_body, depth + 2);
      }
      line(out, depth, "}");
      break;
    case StmtKind::Break:
      line(out, depth, "break;");
      break;
    case StmtKind::Continue:
      line(out, depth, "continue;");
      break;
    case StmtKind::Return:
      line(out, depth, s.expr ? "return " + print(*s.expr) + ";" : "return;");
      break;
    case StmtKind::Block:
      line(out, depth, "{");
      print_list(out, s.body, depth + 1);
      line(out, depth, "}");
      break;
  }
}

}  // namespace

std::string print(const Literal& l) {
  switch (l.type) {
    case Scalar::Int:
      return std::to_string(l.int_value);
    case Scalar::Long:
      return std::to_string(l.int_value) + "L";
    case Scalar::Float:
      return format_floating(l.float_value, true);
    case Scalar::Double:
      return format_floating(l.float_value, false);
    case Scalar::Bool:
      return l.bool_value ? "true" : "false";
    case Scalar::Char: {
      std::string s = "'";
      escape_char(s, static_cast<char>(l.int_value), '\'');
      return s + "'";
    }
    case Scalar::String: {
      std::string s = "\"";
      for (char c : l.string_value) escape_char(s, c, '"');
      return s + "\"";
    }
    case Scalar::Comparer:
      return l.int_value ? "DESC" : "ASC";
    case Scalar::Void:
      break;
  }
  return "";
}

std::string print(const Expr& e) {
  std::string out;
  print_expr(out, e);
  return out;
}

std::string print(const Stmt& s, int depth) {
  std::string out;
  print_stmt(out, s, depth);
  return out;
}

std::string print(const Function& f) {
  std::string out = to_string(f.return_type) + " " + f.name + "(";
  for (std::size_t i = 0; i < f.params.size(); ++i) {
    if (i) out += ", ";
    out += to_string(f.params[i].type) + " " + f.params[i].name;
  }
  out += ") {\n";
  print_list(out, f.body, 1);
  out += "}\n";
  return out;
}

std::string print(const Program& p) {
  std::string out;
  for (std::size_t i = 0; i < p.functions.size(); ++i) {
    if (i) out += '\n';
    out += print(p.functions[i]);
  }
  return out;
}

std::size_t loc_count(const Program& p) {
  std::string text = print(p);
  std::size_t n = 0;
  bool blank = true;
  for (char c : text) {
    if (c == '\n') {
      if (!blank) ++n;
      blank = true;
    } else if (c != ' ') {
      blank = false;
    }
  }
  return n;
}

}  // namespace coset::lang
