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

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "coset/lang/ast.hpp"
#include "coset/transforms/transforms.hpp"

namespace coset::transforms::detail {

using lang::Expr;
using lang::ExprKind;
using lang::Function;
using lang::Program;
using lang::Stmt;
using lang::StmtKind;

/// Annotated copy of `p`.
Program prepare(const Program& p);

/// Wraps up a pass. Without edits the input is returned untouched.
TransformResult finish(const Program& input, Program output,
                       std::vector<Edit> edits,
                       std::map<std::string, std::string> config = {});

/// No user calls and no builtins with effects.
bool is_pure(const Expr& e);
/// Integer division or modulo, indexing, faulting builtins or user calls.
bool may_fault(const Expr& e);
inline bool is_safe(const Expr& e) { return is_pure(e) && !may_fault(e); }
bool has_call(const Expr& e);

void collect_reads(const Expr& e, std::set<std::string>& out);
void collect_reads(const Stmt& s, std::set<std::string>& out);
/// Variables declared or assigned (directly or through an element write or
/// `Sort`) anywhere in `s`, nested statements included.
void collect_writes(const Stmt& s, std::set<std::string>& out);
void collect_writes(const std::vector<Stmt>& list, std::set<std::string>& out);

/// Every variable and parameter name used in `f`.
std::set<std::string> variable_names(const Function& f);
/// A name starting with `base` that is neither a variable of `f`, nor a
/// function or builtin, nor in `taken`.
std::string fresh_name(const Program& p, const Function& f,
                       std::string_view base,
                       const std::set<std::string>& taken = {});

bool is_bool_literal(const Expr& e, bool value);
bool is_literal(const Expr& e);

/// Calls `fn(list)` on every statement list in `body` (nested lists first,
/// then the list itself). `fn` may rewrite the list in place.
template <typename F>
void for_each_list(std::vector<Stmt>& body, F&& fn) {
  for (auto& s : body) {
    for_each_list(s.init, fn);
    for_each_list(s.step, fn);
    for_each_list(s.body, fn);
    for_each_list(s.else_body, fn);
    for (auto& c : s.cases) for_each_list(c.body, fn);
    if (s.default_body) for_each_list(*s.default_body, fn);
  }
  fn(body);
}

/// Post-order visit of every expression of `body`, nested statements
/// included, with mutable access.
template <typename F>
void for_each_expr(Expr& e, F&& fn) {
  for (auto& o : e.operands) for_each_expr(o, fn);
  fn(e);
}

template <typename F>
void for_each_expr(std::vector<Stmt>& body, F&& fn) {
  for (auto& s : body) {
    if (s.target) for_each_expr(*s.target, fn);
    if (s.expr) for_each_expr(*s.expr, fn);
    for_each_expr(s.init, fn);
    for_each_expr(s.step, fn);
    for_each_expr(s.body, fn);
    for_each_expr(s.else_body, fn);
    for (auto& c : s.cases) for_each_expr(c.body, fn);
    if (s.default_body) for_each_expr(*s.default_body, fn);
  }
}

}  // namespace coset::transforms::detail
