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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coset/lang/ast.hpp"

namespace coset::interp {

using lang::Scalar;
using lang::Type;

struct Value;
using Array = std::vector<Value>;

/// Runtime value. Scalars are stored by value with their static type tag;
/// arrays are shared, so copying an array value aliases its storage the way
/// passing an array to a function does.
struct Value {
  Type type;
  std::int64_t i = 0;  // int, long, char, bool
  double f = 0.0;      // float (already rounded to float), double
  std::shared_ptr<const std::string> s;
  std::shared_ptr<Array> a;

  static Value of_int(std::int32_t v);
  static Value of_long(std::int64_t v);
  static Value of_float(float v);
  static Value of_double(double v);
  static Value of_bool(bool v);
  static Value of_char(char v);
  static Value of_string(std::string v);
  static Value of_array(Scalar element, Array elements = {});
  /// Zero value of `t`: 0, 0.0, false, '\0', "" or an empty array.
  static Value zero(Type t);
  static Value from_literal(const lang::Literal& l);

  bool as_bool() const { return i != 0; }
  /// Independent copy; arrays get fresh storage.
  Value deep_copy() const;

  /// Deep structural equality. Floating values compare with `==`, except
  /// that NaN equals NaN.
  friend bool operator==(const Value& x, const Value& y);
};

/// Converts `v` to `to` inside a type group (int <-> long,
/// float <-> double, elementwise for arrays). Values of other types are
/// returned unchanged. Narrowing wraps or rounds like the language would.
Value convert(const Value& v, Type to);

/// Values are equal after mapping both into the widest member of their type
/// group. Used by the approximating oracle.
bool equal_modulo_width(const Value& x, const Value& y);

/// `l op r` evaluated at the precision of `result` (int wraps at 32 bits,
/// long at 64, float rounds to single precision). Comparisons yield bool;
/// `&&` and `||` are not handled here. Returns nullopt on integer division
/// or modulo by zero.
std::optional<Value> apply_binary(lang::BinaryOp op, const Value& l,
                                  const Value& r, Type result);
Value apply_unary(lang::UnaryOp op, const Value& v);
/// True when `l op r` at the width of `result` differs from the same
/// operation in the widest member of its type group (wrap-around or
/// rounding).
bool loses_width(lang::BinaryOp op, const Value& l, const Value& r,
                 Type result);

/// `5`, `5L`, `1.5f`, `1.5`, `true`, `'c'`, `"s"`, `[1 2 3]`.
std::string to_string(const Value& v);

}  // namespace coset::interp
