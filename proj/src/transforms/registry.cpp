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

#include <array>

#include "coset/transforms/transforms.hpp"

namespace coset::transforms {

namespace {

constexpr std::array<TransformKind, 11> kAll{
    TransformKind::CVP,         TransformKind::DCE,
    TransformKind::LU,          TransformKind::HOIST,
    TransformKind::VR,          TransformKind::NCS,
    TransformKind::CFR,         TransformKind::CSU,
    TransformKind::TYPE_APPROX, TransformKind::API_APPROX,
    TransformKind::STRIP_ERROR_HANDLING,
};

}  // namespace

Contract contract_of(TransformKind k) {
  switch (k) {
    case TransformKind::TYPE_APPROX:
    case TransformKind::API_APPROX:
      return Contract::Approximating;
    case TransformKind::STRIP_ERROR_HANDLING:
      return Contract::Changing;
    default:
      return Contract::Preserving;
  }
}

const char* to_string(TransformKind k) {
  switch (k) {
    case TransformKind::CVP: return "CVP";
    case TransformKind::DCE: return "DCE";
    case TransformKind::LU: return "LU";
    case TransformKind::HOIST: return "HOIST";
    case TransformKind::VR: return "VR";
    case TransformKind::NCS: return "NCS";
    case TransformKind::CFR: return "CFR";
    case TransformKind::CSU: return "CSU";
    case TransformKind::TYPE_APPROX: return "TYPE_APPROX";
    case TransformKind::API_APPROX: return "API_APPROX";
    case TransformKind::STRIP_ERROR_HANDLING: return "STRIP_ERROR_HANDLING";
  }
  return "?";
}

const char* to_string(Contract c) {
  switch (c) {
    case Contract::Preserving: return "preserving";
    case Contract::Approximating: return "approximating";
    case Contract::Changing: return "changing";
  }
  return "?";
}

std::optional<TransformKind> parse_kind(std::string_view name) {
  for (auto k : kAll)
    if (name == to_string(k)) return k;
  return std::nullopt;
}

std::span<const TransformKind> all_kinds() { return kAll; }

std::span<const TransformKind> preserving_kinds() {
  return std::span<const TransformKind>(kAll).first(8);
}

const char* to_string(CsuDirection d) {
  switch (d) {
    case CsuDirection::SwitchToIf: return "switch-to-if";
    case CsuDirection::ForToWhile: return "for-to-while";
    case CsuDirection::All: return "all";
  }
  return "?";
}

const char* to_string(TypeMode m) {
  switch (m) {
    case TypeMode::IntToLong: return "int-to-long";
    case TypeMode::LongToInt: return "long-to-int";
    case TypeMode::FloatToDouble: return "float-to-double";
    case TypeMode::DoubleToFloat: return "double-to-float";
  }
  return "?";
}

std::optional<CsuDirection> parse_csu_direction(std::string_view s) {
  for (auto d : {CsuDirection::SwitchToIf, CsuDirection::ForToWhile,
                 CsuDirection::All})
    if (s == to_string(d)) return d;
  return std::nullopt;
}

std::optional<TypeMode> parse_type_mode(std::string_view s) {
  for (auto m : {TypeMode::IntToLong, TypeMode::LongToInt,
                 TypeMode::FloatToDouble, TypeMode::DoubleToFloat})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

TransformResult apply(TransformKind kind, const lang::Program& p,
                      const TransformConfig& config) {
  switch (kind) {
    case TransformKind::CVP: return cvp(p);
    case TransformKind::DCE: return dce(p);
    case TransformKind::LU: return loop_unroll(p, config.unroll_factor);
    case TransformKind::HOIST: return hoist(p);
    case TransformKind::VR: return rename_variables(p, config.seed);
    case TransformKind::NCS: return simplify_nested_conditions(p);
    case TransformKind::CFR: return remove_control_flags(p);
    case TransformKind::CSU:
      return unify_control_statements(p, config.csu, config.site);
    case TransformKind::TYPE_APPROX:
      return approximate_types(p, config.type_mode, config.site);
    case TransformKind::API_APPROX: return substitute_api(p, config.site);
    case TransformKind::STRIP_ERROR_HANDLING:
      return strip_error_handling(p, config.site);
  }
  return {p, false, {}, {}};
}

}  // namespace coset::transforms
