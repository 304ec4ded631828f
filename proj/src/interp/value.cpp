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

#include "coset/interp/value.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coset/lang/printer.hpp"

namespace coset::interp {

using lang::BinaryOp;
using lang::UnaryOp;

Value Value::of_int(std::int32_t v) {
  Value r;
  r.type = Type::scalar(Scalar::Int);
  r.i = v;
  return r;
}

Value Value::of_long(std::int64_t v) {
  Value r;
  r.type = Type::scalar(Scalar::Long);
  r.i = v;
  return r;
}

Value Value::of_float(float v) {
  Value r;
  r.type = Type::scalar(Scalar::Float);
  r.f = v;
  return r;
}

Value Value::of_double(double v) {
  Value r;
  r.type = Type::scalar(Scalar::Double);
  r.f = v;
  return r;
}

Value Value::of_bool(bool v) {
  Value r;
  r.type = Type::scalar(Scalar::Bool);
  r.i = v ? 1 : 0;
  return r;
}

Value Value::of_char(char v) {
  Value r;
  r.type = Type::scalar(Scalar::Char);
  r.i = static_cast<unsigned char>(v);
  return r;
}

Value Value::of_string(std::string v) {
  Value r;
  r.type = Type::scalar(Scalar::String);
  r.s = std::make_shared<const std::string>(std::move(v));
  return r;
}

Value Value::of_array(Scalar element, Array elements) {
  Value r;
  r.type = Type::array_of(element);
  r.a = std::make_shared<Array>(std::move(elements));
  return r;
}

Value Value::zero(Type t) {
  if (t.array) return of_array(t.base);
  if (t.base == Scalar::String) return of_string("");
  Value r;
  r.type = t;
  return r;
}

Value Value::from_literal(const lang::Literal& l) {
  switch (l.type) {
    case Scalar::Int: return of_int(static_cast<std::int32_t>(l.int_value));
    case Scalar::Long: return of_long(l.int_value);
    case Scalar::Float: return of_float(static_cast<float>(l.float_value));
    case Scalar::Double: return of_double(l.float_value);
    case Scalar::Bool: return of_bool(l.bool_value);
    case Scalar::Char: return of_char(static_cast<char>(l.int_value));
    case Scalar::String: return of_string(l.string_value);
    default: break;
  }
  Value r;
  r.type = Type::scalar(l.type);
  r.i = l.int_value;
  return r;
}

Value Value::deep_copy() const {
  if (!a) return *this;
  Value r = *this;
  r.a = std::make_shared<Array>(*a);
  return r;
}

bool operator==(const Value& x, const Value& y) {
  if (!(x.type == y.type)) return false;
  if (x.type.array) {
    if (x.a == y.a) return true;
    if (!x.a || !y.a) return false;
    return *x.a == *y.a;
  }
  switch (x.type.base) {
    case Scalar::Float:
    case Scalar::Double:
      return x.f == y.f || (std::isnan(x.f) && std::isnan(y.f));
    case Scalar::String:
      return *x.s == *y.s;
    default:
      return x.i == y.i;
  }
}

Value convert(const Value& v, Type to) {
  if (v.type == to) return v;
  if (v.type.array != to.array) return v;
  if (to.array) {
    if (!v.a) return Value::of_array(to.base);
    Array out;
    out.reserve(v.a->size());
    for (const auto& e : *v.a) out.push_back(convert(e, to.element()));
    return Value::of_array(to.base, std::move(out));
  }
  if (v.type.is_integral() && to.is_integral()) {
    return to.base == Scalar::Long ? Value::of_long(v.i)
                                   : Value::of_int(static_cast<std::int32_t>(
                                         static_cast<std::uint32_t>(v.i)));
  }
  if (v.type.is_floating() && to.is_floating()) {
    return to.base == Scalar::Double ? Value::of_double(v.f)
                                     : Value::of_float(static_cast<float>(v.f));
  }
  return v;
}

namespace {

std::int64_t wrap32(std::int64_t v) {
  return static_cast<std::int32_t>(static_cast<std::uint32_t>(v));
}

bool compare(BinaryOp op, const Value& l, const Value& r) {
  int c;
  if (l.type.is_floating()) {
    double a = l.f, b = r.f;
    switch (op) {
      case BinaryOp::Lt: return a < b;
      case BinaryOp::Le: return a <= b;
      case BinaryOp::Gt: return a > b;
      case BinaryOp::Ge: return a >= b;
      case BinaryOp::Eq: return a == b;
      default: return a != b;
    }
  }
  if (l.type.base == Scalar::String) {
    c = l.s->compare(*r.s);
  } else {
    c = l.i < r.i ? -1 : (l.i > r.i ? 1 : 0);
  }
  switch (op) {
    case BinaryOp::Lt: return c < 0;
    case BinaryOp::Le: return c <= 0;
    case BinaryOp::Gt: return c > 0;
    case BinaryOp::Ge: return c >= 0;
    case BinaryOp::Eq: return c == 0;
    default: return c != 0;
  }
}

}  // namespace

std::optional<Value> apply_binary(BinaryOp op, const Value& l, const Value& r,
                                Type result) {
  if (lang::is_comparison(op)) return Value::of_bool(compare(op, l, r));
  switch (result.base) {
    case Scalar::Int: {
      std::int64_t a = l.i, b = r.i;
      switch (op) {
        case BinaryOp::Add: return Value::of_int(static_cast<std::int32_t>(wrap32(a + b)));
        case BinaryOp::Sub: return Value::of_int(static_cast<std::int32_t>(wrap32(a - b)));
        case BinaryOp::Mul: return Value::of_int(static_cast<std::int32_t>(wrap32(a * b)));
        case BinaryOp::Div:
          if (b == 0) return std::nullopt;
          return Value::of_int(static_cast<std::int32_t>(wrap32(a / b)));
        case BinaryOp::Mod:
          if (b == 0) return std::nullopt;
          return Value::of_int(static_cast<std::int32_t>(wrap32(a % b)));
        default: break;
      }
      break;
    }
    case Scalar::Long: {
      auto a = static_cast<std::uint64_t>(l.i), b = static_cast<std::uint64_t>(r.i);
      std::int64_t sa = l.i, sb = r.i;
      constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
      switch (op) {
        case BinaryOp::Add: return Value::of_long(static_cast<std::int64_t>(a + b));
        case BinaryOp::Sub: return Value::of_long(static_cast<std::int64_t>(a - b));
        case BinaryOp::Mul: return Value::of_long(static_cast<std::int64_t>(a * b));
        case BinaryOp::Div:
          if (sb == 0) return std::nullopt;
          if (sa == kMin && sb == -1) return Value::of_long(kMin);
          return Value::of_long(sa / sb);
        case BinaryOp::Mod:
          if (sb == 0) return std::nullopt;
          if (sb == -1) return Value::of_long(0);
          return Value::of_long(sa % sb);
        default: break;
      }
      break;
    }
    case Scalar::Float: {
      float a = static_cast<float>(l.f), b = static_cast<float>(r.f);
      switch (op) {
        case BinaryOp::Add: return Value::of_float(a + b);
        case BinaryOp::Sub: return Value::of_float(a - b);
        case BinaryOp::Mul: return Value::of_float(a * b);
        case BinaryOp::Div: return Value::of_float(a / b);
        default: break;
      }
      break;
    }
    case Scalar::Double: {
      double a = l.f, b = r.f;
      switch (op) {
        case BinaryOp::Add: return Value::of_double(a + b);
        case BinaryOp::Sub: return Value::of_double(a - b);
        case BinaryOp::Mul: return Value::of_double(a * b);
        case BinaryOp::Div: return Value::of_double(a / b);
        default: break;
      }
      break;
    }
    default:
      break;
  }
  throw std::logic_error("ill-typed binary operation");
}

Value apply_unary(UnaryOp op, const Value& v) {
  if (op == UnaryOp::Not) return Value::of_bool(!v.as_bool());
  Value r = v;
  switch (v.type.base) {
    case Scalar::Int: r.i = wrap32(-v.i); break;
    case Scalar::Long:
      r.i = static_cast<std::int64_t>(0 - static_cast<std::uint64_t>(v.i));
      break;
    case Scalar::Float: r.f = static_cast<float>(-v.f); break;
    default: r.f = -v.f; break;
  }
  return r;
}

bool loses_width(BinaryOp op, const Value& l, const Value& r, Type result) {
  if (!lang::is_arithmetic(op)) return false;
  switch (result.base) {
    case Scalar::Int: {
      std::int64_t a = l.i, b = r.i, exact = 0;
      switch (op) {
        case BinaryOp::Add: exact = a + b; break;
        case BinaryOp::Sub: exact = a - b; break;
        case BinaryOp::Mul: exact = a * b; break;
        case BinaryOp::Div: exact = b == 0 ? 0 : a / b; break;
        default: return false;
      }
      return wrap32(exact) != exact;
    }
    case Scalar::Long: {
      std::int64_t out = 0;
      switch (op) {
        case BinaryOp::Add: return __builtin_add_overflow(l.i, r.i, &out);
        case BinaryOp::Sub: return __builtin_sub_overflow(l.i, r.i, &out);
        case BinaryOp::Mul: return __builtin_mul_overflow(l.i, r.i, &out);
        case BinaryOp::Div:
          return l.i == std::numeric_limits<std::int64_t>::min() && r.i == -1;
        default: return false;
      }
    }
    case Scalar::Float: {
      auto narrow = apply_binary(op, l, r, result);
      Type wide = result;
      wide.base = Scalar::Double;
      auto exact = apply_binary(op, l, r, wide);
      if (!narrow || !exact || std::isnan(narrow->f)) return false;
      return narrow->f != exact->f;
    }
    default:
      return false;
  }
}

namespace {

Type widest(Type t) {
  if (t.base == Scalar::Int) t.base = Scalar::Long;
  if (t.base == Scalar::Float) t.base = Scalar::Double;
  return t;
}

}  // namespace

bool equal_modulo_width(const Value& x, const Value& y) {
  return convert(x, widest(x.type)) == convert(y, widest(y.type));
}

std::string to_string(const Value& v) {
  if (v.type.array) {
    std::string out = "[";
    if (v.a) {
      for (std::size_t k = 0; k < v.a->size(); ++k) {
        if (k) out += ' ';
        out += to_string((*v.a)[k]);
      }
    }
    return out + "]";
  }
  switch (v.type.base) {
    case Scalar::Int: return lang::print(lang::Literal::of_int(v.i));
    case Scalar::Long: return lang::print(lang::Literal::of_long(v.i));
    case Scalar::Float: return lang::print(lang::Literal::of_float(v.f));
    case Scalar::Double: return lang::print(lang::Literal::of_double(v.f));
    case Scalar::Bool: return v.i ? "true" : "false";
    case Scalar::Char:
      return lang::print(lang::Literal::of_char(static_cast<char>(v.i)));
    case Scalar::String: return lang::print(lang::Literal::of_string(*v.s));
    default: return "<" + lang::to_string(v.type) + ">";
  }
}

}  // namespace coset::interp
