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

#include "coset/interp/interpreter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coset/lang/builtins.hpp"
#include "coset/lang/sema.hpp"

namespace coset::interp {

using lang::BinaryOp;
using lang::BuiltinId;
using lang::Expr;
using lang::ExprKind;
using lang::Function;
using lang::Program;
using lang::Stmt;
using lang::StmtKind;
using lang::UnaryOp;

const char* to_string(FaultKind k) {
  switch (k) {
    case FaultKind::DivByZero: return "division-by-zero";
    case FaultKind::IndexOutOfBounds: return "index-out-of-bounds";
    case FaultKind::Timeout: return "timeout";
    case FaultKind::StackOverflow: return "stack-overflow";
    case FaultKind::MissingReturn: return "missing-return";
  }
  return "?";
}

namespace {

template <typename Eq>
bool outcomes_match(const Outcome& x, const Outcome& y, Eq eq) {
  auto values = [&](const std::vector<Value>& a, const std::vector<Value>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!eq(a[k], b[k])) return false;
    return true;
  };
  if (x.returned.has_value() != y.returned.has_value()) return false;
  if (x.returned && !eq(*x.returned, *y.returned)) return false;
  if (x.fault.has_value() != y.fault.has_value()) return false;
  if (x.fault && x.fault->kind != y.fault->kind) return false;
  return values(x.prints, y.prints) && values(x.final_args, y.final_args);
}

}  // namespace

bool operator==(const Outcome& x, const Outcome& y) {
  return outcomes_match(
      x, y, [](const Value& a, const Value& b) { return a == b; });
}

bool equal_modulo_width(const Outcome& x, const Outcome& y) {
  return outcomes_match(x, y, [](const Value& a, const Value& b) {
    return equal_modulo_width(a, b);
  });
}

std::string describe(const Outcome& o) {
  std::string out;
  if (o.fault) {
    out = std::string("faulted(") + to_string(o.fault->kind) + " at step " +
          std::to_string(o.fault->step) + ")";
  } else if (o.returned) {
    out = "returned " + to_string(*o.returned);
  } else {
    out = "returned";
  }
  if (!o.prints.empty()) {
    out += "; printed";
    for (const auto& v : o.prints) out += " " + to_string(v);
  }
  for (std::size_t k = 0; k < o.final_args.size(); ++k) {
    if (o.final_args[k].type.array)
      out += "; arg" + std::to_string(k) + "=" + to_string(o.final_args[k]);
  }
  return out;
}

namespace {

struct FaultSignal {
  FaultKind kind;
  std::string message;
};

enum class Flow { Normal, Break, Continue, Return };

// Strict weak order on scalars of one type; NaN sorts last.
bool less_scalar(const Value& x, const Value& y) {
  if (x.type.is_floating()) {
    if (std::isnan(x.f)) return false;
    if (std::isnan(y.f)) return true;
    return x.f < y.f;
  }
  if (x.type.base == Scalar::String) return *x.s < *y.s;
  return x.i < y.i;
}

class Machine {
 public:
  Machine(const Program& p, const RunOptions& o, ExecutionObserver* obs)
      : p_(p), opt_(o), obs_(obs) {}

  Outcome run(std::span<const Value> args) {
    const Function& entry = p_.entry();
    Outcome out;
    for (std::size_t k = 0; k < args.size(); ++k)
      out.final_args.push_back(convert(args[k].deep_copy(), entry.params[k].type));
    try {
      Value r = call(entry, std::vector<Value>(out.final_args));
      if (!entry.return_type.is_void()) out.returned = std::move(r);
    } catch (const FaultSignal& f) {
      out.fault = Fault{f.kind, steps_, f.message};
    }
    out.prints = std::move(prints_);
    out.steps = steps_;
    out.width_events = width_events_;
    return out;
  }

 private:
  [[noreturn]] void fault(FaultKind k, std::string msg) {
    throw FaultSignal{k, std::move(msg)};
  }

  void step(const Stmt& s) {
    if (++steps_ > opt_.step_limit) {
      steps_ = opt_.step_limit;
      fault(FaultKind::Timeout, "step limit exceeded");
    }
    if (obs_) obs_->on_statement(s, depth_);
  }

  void loop_test() {
    if (++steps_ > opt_.step_limit) {
      steps_ = opt_.step_limit;
      fault(FaultKind::Timeout, "step limit exceeded");
    }
  }

  Value& slot(int k) { return stack_[base_ + static_cast<std::size_t>(k)]; }

  void wrote(int local, const Value& v) {
    if (obs_) obs_->on_write(static_cast<int>(base_) + local, v);
  }

  Value call(const Function& f, std::vector<Value> args) {
    if (depth_ + 1 > opt_.max_call_depth)
      fault(FaultKind::StackOverflow, "call depth limit exceeded");
    const std::size_t saved_base = base_;
    const Function* saved_fn = fn_;
    const std::size_t new_base = fn_ ? base_ + fn_->slot_types.size() : 0;
    stack_.resize(new_base + f.slot_types.size());
    for (std::size_t k = 0; k < f.slot_types.size(); ++k)
      stack_[new_base + k] =
          k < args.size() ? convert(args[k], f.slot_types[k])
                          : Value::zero(f.slot_types[k]);
    base_ = new_base;
    fn_ = &f;
    ++depth_;
    Flow flow = exec_list(f.body);
    --depth_;
    Value result;
    if (flow == Flow::Return) {
      result = std::move(ret_);
      ret_ = Value{};
    } else if (!f.return_type.is_void()) {
      fault(FaultKind::MissingReturn, "'" + f.name + "' ended without a value");
    }
    stack_.resize(new_base);
    base_ = saved_base;
    fn_ = saved_fn;
    return result;
  }

  Flow exec_list(const std::vector<Stmt>& list) {
    for (const auto& s : list) {
      Flow f = exec(s);
      if (f != Flow::Normal) return f;
    }
    return Flow::Normal;
  }

  void iteration_end(const Stmt& loop) {
    if (!obs_) return;
    obs_->on_iteration_end(
        loop, depth_,
        std::span<const Value>(stack_.data() + base_, fn_->slot_types.size()));
  }

  Flow exec(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::VarDecl: {
        step(s);
        Value v = s.expr ? convert(eval(*s.expr), s.decl_type)
                         : Value::zero(s.decl_type);
        slot(s.slot) = std::move(v);
        wrote(s.slot, slot(s.slot));
        return Flow::Normal;
      }
      case StmtKind::Assign:
        step(s);
        assign(s);
        return Flow::Normal;
      case StmtKind::If:
        step(s);
        if (eval(*s.expr).as_bool()) return exec_list(s.body);
        return exec_list(s.else_body);
      case StmtKind::While:
        step(s);
        while (true) {
          loop_test();
          if (!eval(*s.expr).as_bool()) break;
          Flow f = exec_list(s.body);
          if (f == Flow::Break) break;
          if (f == Flow::Return) return f;
          iteration_end(s);
        }
        return Flow::Normal;
      case StmtKind::For: {
        step(s);
        if (!s.init.empty()) exec(s.init[0]);
        while (true) {
          loop_test();
          if (s.expr && !eval(*s.expr).as_bool()) break;
          Flow f = exec_list(s.body);
          if (f == Flow::Break) break;
          if (f == Flow::Return) return f;
          if (!s.step.empty()) exec(s.step[0]);
          iteration_end(s);
        }
        return Flow::Normal;
      }
      case StmtKind::Switch: {
        step(s);
        Value v = eval(*s.expr);
        for (const auto& c : s.cases)
          if (Value::from_literal(c.label).i == v.i) return exec_list(c.body);
        if (s.default_body) return exec_list(*s.default_body);
        return Flow::Normal;
      }
      case StmtKind::Break:
        step(s);
        return Flow::Break;
      case StmtKind::Continue:
        step(s);
        return Flow::Continue;
      case StmtKind::Return:
        step(s);
        ret_ = s.expr ? convert(eval(*s.expr), fn_->return_type) : Value{};
        return Flow::Return;
      case StmtKind::ExprStmt:
        step(s);
        eval(*s.expr);
        return Flow::Normal;
      case StmtKind::Block:
        return exec_list(s.body);
    }
    return Flow::Normal;
  }

  void assign(const Stmt& s) {
    const Expr& t = *s.target;
    auto op = lang::compound_operator(s.assign_op);
    if (t.kind == ExprKind::Var) {
      Value v = eval(*s.expr);
      if (op) v = binary(*op, slot(t.slot), v, t.type);
      slot(t.slot) = convert(v, t.type);
      wrote(t.slot, slot(t.slot));
      return;
    }
    Value arr = eval(t.operands[0]);
    std::int64_t idx = eval(t.operands[1]).i;
    check_bounds(arr, idx);
    Value v = eval(*s.expr);
    Value& cell = (*arr.a)[static_cast<std::size_t>(idx)];
    if (op) v = binary(*op, cell, v, t.type);
    cell = convert(v, t.type);
    if (t.operands[0].kind == ExprKind::Var) wrote(t.operands[0].slot, arr);
  }

  void check_bounds(const Value& arr, std::int64_t idx) {
    std::int64_t n = arr.a ? static_cast<std::int64_t>(arr.a->size()) : 0;
    if (idx < 0 || idx >= n)
      fault(FaultKind::IndexOutOfBounds,
            "index " + std::to_string(idx) + " outside array of length " +
                std::to_string(n));
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Literal:
        return Value::from_literal(e.literal);
      case ExprKind::Var:
        return slot(e.slot);
      case ExprKind::Unary: {
        return apply_unary(e.unary_op, eval(e.operands[0]));
      }
      case ExprKind::Binary: {
        if (e.binary_op == BinaryOp::And) {
          if (!eval(e.operands[0]).as_bool()) return Value::of_bool(false);
          return Value::of_bool(eval(e.operands[1]).as_bool());
        }
        if (e.binary_op == BinaryOp::Or) {
          if (eval(e.operands[0]).as_bool()) return Value::of_bool(true);
          return Value::of_bool(eval(e.operands[1]).as_bool());
        }
        Value l = eval(e.operands[0]);
        Value r = eval(e.operands[1]);
        return binary(e.binary_op, l, r, e.type);
      }
      case ExprKind::Index: {
        const Expr& a = e.operands[0];
        if (a.kind == ExprKind::Var) {
          std::int64_t idx = eval(e.operands[1]).i;
          const Value& arr = slot(a.slot);
          check_bounds(arr, idx);
          return (*arr.a)[static_cast<std::size_t>(idx)];
        }
        Value arr = eval(a);
        std::int64_t idx = eval(e.operands[1]).i;
        check_bounds(arr, idx);
        return (*arr.a)[static_cast<std::size_t>(idx)];
      }
      case ExprKind::ArrayLit: {
        Array out;
        out.reserve(e.operands.size());
        for (const auto& o : e.operands)
          out.push_back(convert(eval(o), e.type.element()));
        return Value::of_array(e.type.base, std::move(out));
      }
      case ExprKind::Call:
        return eval_call(e);
    }
    return Value{};
  }

  Value binary(BinaryOp op, const Value& l, const Value& r, Type result) {
    auto v = apply_binary(op, l, r, result);
    if (loses_width(op, l, r, result)) ++width_events_;
    if (!v) fault(FaultKind::DivByZero, "integer division by zero");
    return std::move(*v);
  }

  Value eval_call(const Expr& e) {
    if (e.slot >= 0) {
      std::vector<Value> args;
      args.reserve(e.operands.size());
      for (const auto& o : e.operands) args.push_back(eval(o));
      return call(p_.functions[static_cast<std::size_t>(e.slot)], std::move(args));
    }
    const auto id = static_cast<BuiltinId>(-e.slot - 2);
    switch (id) {
      case BuiltinId::Sort: {
        Value arr = eval(e.operands[0]);
        bool desc = e.operands.size() == 2 && e.operands[1].literal.int_value == 1;
        if (arr.a) {
          if (desc) {
            std::stable_sort(arr.a->begin(), arr.a->end(),
                             [](const Value& x, const Value& y) { return less_scalar(y, x); });
          } else {
            std::stable_sort(arr.a->begin(), arr.a->end(), less_scalar);
          }
        }
        if (e.operands[0].kind == ExprKind::Var) wrote(e.operands[0].slot, arr);
        return Value{};
      }
      case BuiltinId::Min:
      case BuiltinId::Max: {
        Value arr = eval(e.operands[0]);
        if (!arr.a || arr.a->empty())
          fault(FaultKind::IndexOutOfBounds, e.name + " of an empty array");
        const Array& xs = *arr.a;
        std::size_t best = 0;
        for (std::size_t k = 1; k < xs.size(); ++k) {
          bool better = id == BuiltinId::Min ? less_scalar(xs[k], xs[best])
                                             : less_scalar(xs[best], xs[k]);
          if (better) best = k;
        }
        return xs[best];
      }
      case BuiltinId::Length: {
        Value arr = eval(e.operands[0]);
        return Value::of_int(arr.a ? static_cast<std::int32_t>(arr.a->size()) : 0);
      }
      case BuiltinId::ElementAt: {
        Value arr = eval(e.operands[0]);
        std::int64_t idx = eval(e.operands[1]).i;
        check_bounds(arr, idx);
        return (*arr.a)[static_cast<std::size_t>(idx)];
      }
      case BuiltinId::GetNumericValue: {
        std::int64_t c = eval(e.operands[0]).i;
        return Value::of_int(c >= '0' && c <= '9' ? static_cast<std::int32_t>(c - '0') : -1);
      }
      case BuiltinId::Print:
        prints_.push_back(eval(e.operands[0]).deep_copy());
        return Value{};
      case BuiltinId::ToInt:
        return Value::of_int(static_cast<std::int32_t>(eval(e.operands[0]).i));
    }
    return Value{};
  }

  const Program& p_;
  const RunOptions& opt_;
  ExecutionObserver* obs_;
  std::vector<Value> stack_;
  std::size_t base_ = 0;
  const Function* fn_ = nullptr;
  int depth_ = 0;
  std::uint64_t steps_ = 0;
  Value ret_;
  std::vector<Value> prints_;
  std::uint64_t width_events_ = 0;
};

}  // namespace

Interpreter::Interpreter(const Program& p, RunOptions options)
    : program_(p), options_(options) {
  if (program_.functions.empty())
    throw std::invalid_argument("program has no functions");
  lang::annotate(program_);
}

Outcome Interpreter::run(std::span<const Value> args,
                         ExecutionObserver* observer) const {
  if (args.size() != program_.entry().params.size())
    throw std::invalid_argument(
        "entry '" + program_.entry().name + "' expects " +
        std::to_string(program_.entry().params.size()) + " argument(s), got " +
        std::to_string(args.size()));
  Machine m(program_, options_, observer);
  return m.run(args);
}

Outcome run(const lang::Program& p, std::span<const Value> args,
            RunOptions options) {
  return Interpreter(p, options).run(args);
}

}  // namespace coset::interp
