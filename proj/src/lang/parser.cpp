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

#include "coset/lang/parser.hpp"

#include <limits>
#include <set>

#include "coset/lang/sema.hpp"
#include "lexer.hpp"

namespace coset::lang {

namespace {

struct ParseFailure {};

class Parser {
 public:
  Parser(std::string_view text, Diagnostics& diags)
      : text_(text), diags_(diags) {
    tokens_ = tokenize(text, diags_);
  }

  std::optional<Program> run() {
    if (!diags_.empty()) return std::nullopt;
    try {
      Program p;
      std::set<std::string> names;
      while (cur().kind != Tok::End) {
        Function f = parse_function(p);
        if (!names.insert(f.name).second) {
          diags_.push_back({Severity::Error, f.span,
                            "duplicate function '" + f.name + "'",
                            "duplicate-function"});
          return std::nullopt;
        }
        p.functions.push_back(std::move(f));
      }
      if (p.functions.empty()) {
        diags_.push_back({Severity::Error, cur().span,
                          "expected at least one function", "syntax"});
        return std::nullopt;
      }
      p.source = std::string(text_);
      p.next_id = next_id_;
      return p;
    } catch (const ParseFailure&) {
      return std::nullopt;
    }
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& ahead(std::size_t n) const {
    return tokens_[std::min(pos_ + n, tokens_.size() - 1)];
  }

  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    last_end_ = t.span.end();
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) {
    diags_.push_back({Severity::Error, cur().span,
                      "expected " + expected + ", found " + describe(cur()),
                      "syntax"});
    throw ParseFailure{};
  }

  [[noreturn]] void fail_at(const Span& s, const std::string& msg,
                            const char* code = "syntax") {
    diags_.push_back({Severity::Error, s, msg, code});
    throw ParseFailure{};
  }

  void expect_punct(std::string_view p) {
    if (!cur().is_punct(p)) fail("'" + std::string(p) + "'");
    take();
  }

  bool accept_punct(std::string_view p) {
    if (!cur().is_punct(p)) return false;
    take();
    return true;
  }

  Span finish(Span start) const {
    start.length = last_end_ > start.offset ? last_end_ - start.offset : 0;
    return start;
  }

  static bool is_type_keyword(const Token& t) {
    if (t.kind != Tok::Keyword) return false;
    return t.text == "void" || t.text == "int" || t.text == "long" ||
           t.text == "float" || t.text == "double" || t.text == "bool" ||
           t.text == "char" || t.text == "string";
  }

  Type parse_type() {
    if (!is_type_keyword(cur())) fail("a type");
    const std::string& kw = take().text;
    Type t;
    if (kw == "void") t.base = Scalar::Void;
    else if (kw == "int") t.base = Scalar::Int;
    else if (kw == "long") t.base = Scalar::Long;
    else if (kw == "float") t.base = Scalar::Float;
    else if (kw == "double") t.base = Scalar::Double;
    else if (kw == "bool") t.base = Scalar::Bool;
    else if (kw == "char") t.base = Scalar::Char;
    else t.base = Scalar::String;
    if (cur().is_punct("[") && ahead(1).is_punct("]")) {
      take();
      take();
      t.array = true;
    }
    return t;
  }

  std::string parse_ident() {
    if (cur().kind != Tok::Ident) fail("an identifier");
    return take().text;
  }

  Function parse_function(Program&) {
    Function f;
    Span start = cur().span;
    f.id = next_id_++;
    f.return_type = parse_type();
    f.name = parse_ident();
    expect_punct("(");
    if (!cur().is_punct(")")) {
      do {
        Param prm;
        Span ps = cur().span;
        prm.id = next_id_++;
        prm.type = parse_type();
        prm.name = parse_ident();
        prm.span = finish(ps);
        f.params.push_back(std::move(prm));
      } while (accept_punct(","));
    }
    expect_punct(")");
    if (!cur().is_punct("{")) fail("'{'");
    f.body = parse_block_body();
    f.span = finish(start);
    return f;
  }

  std::vector<Stmt> parse_block_body() {
    expect_punct("{");
    std::vector<Stmt> out;
    while (!cur().is_punct("}")) {
      if (cur().kind == Tok::End) fail("'}'");
      out.push_back(parse_stmt());
    }
    take();
    return out;
  }

  // Body of if/while/for: a braced block or a single statement.
  std::vector<Stmt> parse_body() {
    if (cur().is_punct("{")) return parse_block_body();
    std::vector<Stmt> out;
    out.push_back(parse_stmt());
    return out;
  }

  Stmt new_stmt(StmtKind k) {
    Stmt s;
    s.kind = k;
    s.id = next_id_++;
    return s;
  }

  Stmt parse_stmt() {
    Span start = cur().span;
    const Token& t = cur();
    Stmt s;
    if (t.is_punct("{")) {
      s = new_stmt(StmtKind::Block);
      s.body = parse_block_body();
    } else if (t.is_keyword("if")) {
      take();
      s = new_stmt(StmtKind::If);
      expect_punct("(");
      s.expr = parse_expr();
      expect_punct(")");
      s.body = parse_body();
      if (cur().is_keyword("else")) {
        take();
        s.has_else = true;
        s.else_body = parse_body();
      }
    } else if (t.is_keyword("while")) {
      take();
      s = new_stmt(StmtKind::While);
      expect_punct("(");
      s.expr = parse_expr();
      expect_punct(")");
      s.body = parse_body();
    } else if (t.is_keyword("for")) {
      take();
      s = new_stmt(StmtKind::For);
      expect_punct("(");
      if (!cur().is_punct(";")) s.init.push_back(parse_simple(true));
      expect_punct(";");
      if (!cur().is_punct(";")) s.expr = parse_expr();
      expect_punct(";");
      if (!cur().is_punct(")")) s.step.push_back(parse_simple(false));
      expect_punct(")");
      s.body = parse_body();
    } else if (t.is_keyword("switch")) {
      take();
      s = new_stmt(StmtKind::Switch);
      expect_punct("(");
      s.expr = parse_expr();
      expect_punct(")");
      parse_switch_body(s);
    } else if (t.is_keyword("break") || t.is_keyword("continue")) {
      s = new_stmt(t.text == "break" ? StmtKind::Break : StmtKind::Continue);
      take();
      expect_punct(";");
    } else if (t.is_keyword("return")) {
      take();
      s = new_stmt(StmtKind::Return);
      if (!cur().is_punct(";")) s.expr = parse_expr();
      expect_punct(";");
    } else {
      s = parse_simple(true);
      expect_punct(";");
    }
    s.span = finish(start);
    return s;
  }

  // Declaration, assignment or expression statement without the ';'.
  Stmt parse_simple(bool allow_decl) {
    Span start = cur().span;
    Stmt s;
    if (is_type_keyword(cur())) {
      if (!allow_decl) fail("an assignment");
      s = new_stmt(StmtKind::VarDecl);
      s.decl_type = parse_type();
      s.name = parse_ident();
      if (accept_punct("=")) s.expr = parse_expr();
    } else {
      Expr e = parse_expr();
      std::optional<AssignOp> op;
      if (cur().is_punct("=")) op = AssignOp::Set;
      else if (cur().is_punct("+=")) op = AssignOp::Add;
      else if (cur().is_punct("-=")) op = AssignOp::Sub;
      else if (cur().is_punct("*=")) op = AssignOp::Mul;
      else if (cur().is_punct("/=")) op = AssignOp::Div;
      else if (cur().is_punct("%=")) op = AssignOp::Mod;
      if (op) {
        if (e.kind != ExprKind::Var && e.kind != ExprKind::Index)
          fail_at(e.span, "left side of assignment is not assignable");
        take();
        s = new_stmt(StmtKind::Assign);
        s.assign_op = *op;
        s.target = std::move(e);
        s.expr = parse_expr();
      } else {
        s = new_stmt(StmtKind::ExprStmt);
        s.expr = std::move(e);
      }
    }
    s.span = finish(start);
    return s;
  }

  void parse_switch_body(Stmt& s) {
    expect_punct("{");
    while (!cur().is_punct("}")) {
      if (cur().is_keyword("case")) {
        Span cs = cur().span;
        take();
        SwitchCase c;
        c.label = parse_case_label();
        expect_punct(":");
        c.body = parse_case_stmts();
        c.span = finish(cs);
        s.cases.push_back(std::move(c));
      } else if (cur().is_keyword("default")) {
        if (s.default_body) fail_at(cur().span, "duplicate default label");
        take();
        expect_punct(":");
        s.default_body = parse_case_stmts();
      } else {
        fail("'case', 'default' or '}'");
      }
    }
    take();
  }

  std::vector<Stmt> parse_case_stmts() {
    std::vector<Stmt> out;
    while (!cur().is_keyword("case") && !cur().is_keyword("default") &&
           !cur().is_punct("}")) {
      if (cur().kind == Tok::End) fail("'}'");
      out.push_back(parse_stmt());
    }
    return out;
  }

  Literal parse_case_label() {
    bool neg = false;
    if (cur().is_punct("-")) {
      take();
      neg = true;
    }
    const Token& t = cur();
    if (t.kind == Tok::IntLit) {
      take();
      return int_literal(t, neg).literal;
    }
    if (t.kind == Tok::CharLit && !neg) {
      take();
      return Literal::of_char(t.text.empty() ? '\0' : t.text[0]);
    }
    fail("a constant case label");
  }

  Expr new_expr(ExprKind k, Span start) {
    Expr e;
    e.kind = k;
    e.id = next_id_++;
    e.span = start;
    return e;
  }

  Expr int_literal(const Token& t, bool negative) {
    Expr e = new_expr(ExprKind::Literal, t.span);
    if (t.int_overflow) fail_at(t.span, "integer literal out of range");
    const std::uint64_t v = t.int_value;
    if (t.long_suffix) {
      const std::uint64_t limit =
          negative ? std::uint64_t{1} << 63 : (std::uint64_t{1} << 63) - 1;
      if (v > limit) fail_at(t.span, "integer literal out of range");
      e.literal = Literal::of_long(
          negative ? static_cast<std::int64_t>(0 - v) : static_cast<std::int64_t>(v));
    } else {
      const std::uint64_t limit = negative ? 2147483648ULL : 2147483647ULL;
      if (v > limit)
        fail_at(t.span, "integer literal out of range for int (use the L suffix)");
      e.literal = Literal::of_int(negative ? -static_cast<std::int64_t>(v)
                                           : static_cast<std::int64_t>(v));
    }
    return e;
  }

  Expr float_literal(const Token& t, bool negative) {
    Expr e = new_expr(ExprKind::Literal, t.span);
    double v = negative ? -t.float_value : t.float_value;
    e.literal = t.float_suffix ? Literal::of_float(v) : Literal::of_double(v);
    return e;
  }

  Expr parse_expr() { return parse_binary(0); }

  static int precedence(const Token& t, BinaryOp& op) {
    if (t.kind != Tok::Punct) return -1;
    const std::string& s = t.text;
    if (s == "||") { op = BinaryOp::Or; return 1; }
    if (s == "&&") { op = BinaryOp::And; return 2; }
    if (s == "==") { op = BinaryOp::Eq; return 3; }
    if (s == "!=") { op = BinaryOp::Ne; return 3; }
    if (s == "<") { op = BinaryOp::Lt; return 4; }
    if (s == "<=") { op = BinaryOp::Le; return 4; }
    if (s == ">") { op = BinaryOp::Gt; return 4; }
    if (s == ">=") { op = BinaryOp::Ge; return 4; }
    if (s == "+") { op = BinaryOp::Add; return 5; }
    if (s == "-") { op = BinaryOp::Sub; return 5; }
    if (s == "*") { op = BinaryOp::Mul; return 6; }
    if (s == "/") { op = BinaryOp::Div; return 6; }
    if (s == "%") { op = BinaryOp::Mod; return 6; }
    return -1;
  }

  Expr parse_binary(int min_prec) {
    Span start = cur().span;
    Expr lhs = parse_unary();
    while (true) {
      BinaryOp op{};
      int prec = precedence(cur(), op);
      if (prec < 0 || prec < min_prec) break;
      take();
      Expr rhs = parse_binary(prec + 1);
      Expr e = new_expr(ExprKind::Binary, start);
      e.binary_op = op;
      e.operands.push_back(std::move(lhs));
      e.operands.push_back(std::move(rhs));
      e.span = finish(start);
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr parse_unary() {
    Span start = cur().span;
    if (cur().is_punct("-")) {
      take();
      if (cur().kind == Tok::IntLit) {
        Expr e = int_literal(take(), true);
        e.span = finish(start);
        return parse_postfix(std::move(e), start);
      }
      if (cur().kind == Tok::FloatLit) {
        Expr e = float_literal(take(), true);
        e.span = finish(start);
        return parse_postfix(std::move(e), start);
      }
      Expr operand = parse_unary();
      Expr e = new_expr(ExprKind::Unary, start);
      e.unary_op = UnaryOp::Neg;
      e.operands.push_back(std::move(operand));
      e.span = finish(start);
      return e;
    }
    if (cur().is_punct("!")) {
      take();
      Expr operand = parse_unary();
      Expr e = new_expr(ExprKind::Unary, start);
      e.unary_op = UnaryOp::Not;
      e.operands.push_back(std::move(operand));
      e.span = finish(start);
      return e;
    }
    return parse_postfix(parse_primary(), start);
  }

  Expr parse_postfix(Expr e, Span start) {
    while (cur().is_punct("[")) {
      take();
      Expr idx = parse_expr();
      expect_punct("]");
      Expr ix = new_expr(ExprKind::Index, start);
      ix.operands.push_back(std::move(e));
      ix.operands.push_back(std::move(idx));
      ix.span = finish(start);
      e = std::move(ix);
    }
    return e;
  }

  Expr parse_primary() {
    Span start = cur().span;
    const Token& t = cur();
    switch (t.kind) {
      case Tok::IntLit:
        return int_literal(take(), false);
      case Tok::FloatLit:
        return float_literal(take(), false);
      case Tok::CharLit: {
        take();
        Expr e = new_expr(ExprKind::Literal, start);
        e.literal = Literal::of_char(t.text.empty() ? '\0' : t.text[0]);
        return e;
      }
      case Tok::StringLit: {
        take();
        Expr e = new_expr(ExprKind::Literal, start);
        e.literal = Literal::of_string(t.text);
        return e;
      }
      case Tok::Keyword: {
        if (t.text == "true" || t.text == "false") {
          take();
          Expr e = new_expr(ExprKind::Literal, start);
          e.literal = Literal::of_bool(t.text == "true");
          return e;
        }
        if (t.text == "ASC" || t.text == "DESC") {
          take();
          Expr e = new_expr(ExprKind::Literal, start);
          e.literal.type = Scalar::Comparer;
          e.literal.int_value = t.text == "DESC" ? 1 : 0;
          return e;
        }
        fail("an expression");
      }
      case Tok::Ident: {
        std::string name = take().text;
        if (cur().is_punct("(")) {
          take();
          Expr e = new_expr(ExprKind::Call, start);
          e.name = std::move(name);
          if (!cur().is_punct(")")) {
            do {
              e.operands.push_back(parse_expr());
            } while (accept_punct(","));
          }
          expect_punct(")");
          e.span = finish(start);
          return e;
        }
        Expr e = new_expr(ExprKind::Var, start);
        e.name = std::move(name);
        e.span = finish(start);
        return e;
      }
      case Tok::Punct: {
        if (t.text == "(") {
          take();
          Expr e = parse_expr();
          expect_punct(")");
          return e;
        }
        if (t.text == "[") {
          take();
          Expr e = new_expr(ExprKind::ArrayLit, start);
          if (!cur().is_punct("]")) {
            do {
              e.operands.push_back(parse_expr());
            } while (accept_punct(","));
          }
          expect_punct("]");
          e.span = finish(start);
          return e;
        }
        fail("an expression");
      }
      case Tok::End:
        fail("an expression");
    }
    fail("an expression");
  }

  std::string_view text_;
  Diagnostics& diags_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::uint32_t last_end_ = 0;
  NodeId next_id_ = 1;
};

}  // namespace

ParseResult parse(std::string_view text) {
  ParseResult r;
  Parser p(text, r.diagnostics);
  r.program = p.run();
  return r;
}

Program parse_checked(std::string_view text) {
  ParseResult r = parse(text);
  if (!r.ok()) throw SourceError(format(r.diagnostics), r.diagnostics);
  Diagnostics d = validate(*r.program);
  if (!d.empty()) throw SourceError(format(d), d);
  return std::move(*r.program);
}

std::string format(const Diagnostic& d) {
  return std::to_string(d.span.line) + ":" + std::to_string(d.span.column) +
         ": " + (d.severity == Severity::Error ? "error" : "warning") + "[" +
         d.code + "]: " + d.message;
}

std::string format(const Diagnostics& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += '\n';
    out += format(d);
  }
  return out;
}

}  // namespace coset::lang
