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

#include <cstdint>

#include "common.hpp"
#include "coset/lang/sema.hpp"

namespace coset::transforms {

using namespace detail;
using lang::Literal;
using lang::Scalar;
using lang::Type;

namespace {

struct Retyping {
  Scalar from;
  Scalar to;
  bool narrowing;
};

Retyping retyping(TypeMode m) {
  switch (m) {
    case TypeMode::IntToLong: return {Scalar::Int, Scalar::Long, false};
    case TypeMode::LongToInt: return {Scalar::Long, Scalar::Int, true};
    case TypeMode::FloatToDouble: return {Scalar::Float, Scalar::Double, false};
    case TypeMode::DoubleToFloat: return {Scalar::Double, Scalar::Float, true};
  }
  return {Scalar::Int, Scalar::Long, false};
}

class Retyper {
 public:
  Retyper(TypeMode mode, std::optional<lang::NodeId> site,
          std::vector<Edit>& edits)
      : r_(retyping(mode)), site_(site), edits_(edits) {}

  void run(Function& f) {
    if (!site_ && retype(f.return_type))
      edits_.push_back({f.span, f.id, "return type " + describe()});
    for (auto& prm : f.params) {
      if ((!site_ || *site_ == prm.id) && retype(prm.type))
        edits_.push_back({prm.span, prm.id, prm.name + " " + describe()});
    }
    decls(f.body);
    if (r_.narrowing && !site_) {
      for_each_expr(f.body, [&](Expr& e) {
        if (e.kind == ExprKind::Literal) narrow(e);
      });
    }
  }

 private:
  std::string describe() const {
    return lang::to_string(r_.from) + " -> " + lang::to_string(r_.to);
  }

  bool retype(Type& t) {
    if (t.base != r_.from) return false;
    t.base = r_.to;
    return true;
  }

  void narrow(Expr& e) {
    Literal& l = e.literal;
    if (l.type != r_.from) return;
    if (r_.to == Scalar::Int) {
      l = Literal::of_int(static_cast<std::int32_t>(static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(l.int_value))));
    } else {
      l = Literal::of_float(l.float_value);
    }
  }

  void decls(std::vector<Stmt>& list) {
    for (auto& s : list) {
      if (s.kind == StmtKind::VarDecl && (!site_ || *site_ == s.id) &&
          retype(s.decl_type)) {
        edits_.push_back({s.span, s.id, s.name + " " + describe()});
        if (site_ && r_.narrowing && s.expr && s.expr->kind == ExprKind::Literal)
          narrow(*s.expr);
      }
      decls(s.init);
      decls(s.body);
      decls(s.else_body);
      for (auto& c : s.cases) decls(c.body);
      if (s.default_body) decls(*s.default_body);
    }
  }

  Retyping r_;
  std::optional<lang::NodeId> site_;
  std::vector<Edit>& edits_;
};

}  // namespace

TransformResult approximate_types(const Program& p, TypeMode mode,
                                  std::optional<lang::NodeId> site) {
  Program out = p;
  std::vector<Edit> edits;
  for (auto& f : out.functions) Retyper(mode, site, edits).run(f);
  std::map<std::string, std::string> config{{"mode", to_string(mode)}};
  if (site) config["site"] = std::to_string(*site);
  if (!edits.empty() && !lang::validate(out).empty()) edits.clear();
  return finish(p, std::move(out), std::move(edits), std::move(config));
}

TransformResult substitute_api(const Program& p,
                               std::optional<lang::NodeId> site) {
  Program out = p;
  std::vector<Edit> edits;
  for (auto& f : out.functions) {
    for_each_expr(f.body, [&](Expr& e) {
      if (e.kind != ExprKind::Call || (site && *site != e.id)) return;
      if (e.name == "Sort" && e.operands.size() == 1) {
        edits.push_back({e.span, e.id, "Sort(a) -> Sort(a, ASC)"});
        Expr asc = Expr::make_literal(Literal::integral(Scalar::Comparer, 0));
        asc.span = e.span;
        asc.id = out.fresh_id();
        e.operands.push_back(std::move(asc));
      } else if (e.name == "Sort" && e.operands.size() == 2 &&
                 e.operands[1].kind == ExprKind::Literal &&
                 e.operands[1].literal.int_value == 0) {
        edits.push_back({e.span, e.id, "Sort(a, ASC) -> Sort(a)"});
        e.operands.pop_back();
      } else if (e.name == "ElementAt" && e.operands.size() == 2) {
        edits.push_back({e.span, e.id, "ElementAt(a, i) -> a[i]"});
        Expr idx = Expr::make_index(std::move(e.operands[0]),
                                    std::move(e.operands[1]));
        idx.span = e.span;
        idx.id = out.fresh_id();
        e = std::move(idx);
      }
    });
  }
  std::map<std::string, std::string> config;
  if (site) config["site"] = std::to_string(*site);
  return finish(p, std::move(out), std::move(edits), std::move(config));
}

}  // namespace coset::transforms
