// Copyright 2026 The Orlicz Authors
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
#include "orlicz/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

using nlohmann::json;

void write(const json& j, int indent, int depth, std::string& out) {
  auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(v, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isnan(v)) {
        out += "\"nan\"";
      } else if (std::isinf(v)) {
        out += v > 0 ? "\"inf\"" : "\"-inf\"";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
      }
      return;
    }
    default:
      out += j.dump();
  }
}

const char* form_name(TermForm f) {
  switch (f) {
    case TermForm::power:
      return "power";
    case TermForm::affine:
      return "affine";
    case TermForm::log:
      return "log";
    case TermForm::exp:
      return "exp";
  }
  return "unknown";
}

TermForm form_from_name(const std::string& s) {
  if (s == "power") return TermForm::power;
  if (s == "affine") return TermForm::affine;
  if (s == "log") return TermForm::log;
  if (s == "exp") return TermForm::exp;
  throw FormatError("unknown term form '" + s + "'");
}

bool is_builtin_name(const std::string& s) {
  for (Builtin b : {Builtin::power, Builtin::entropy, Builtin::counterexample,
                    Builtin::exp_minus_one, Builtin::affine}) {
    if (to_string(b) == s) return true;
  }
  return false;
}

std::vector<double> number_list(const json& j) {
  std::vector<double> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw FormatError("expected an array of numbers");
  for (const auto& v : j) out.push_back(json_number(v));
  return out;
}

}  // namespace

std::string dump_json(const json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

double json_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw FormatError("expected a number, got " + j.dump());
}

json to_json(const YoungFunction& phi) {
  json j;
  j["kind"] = phi.kind();
  j["params"] = phi.params();
  if (const YoungFunction* base = phi.base()) {
    j["base"] = to_json(*base);
    return j;
  }
  json pieces = json::array();
  for (const Piece& p : phi.pieces()) {
    json terms = json::array();
    for (const Term& t : p.terms) {
      terms.push_back({{"form", form_name(t.form)}, {"coeff", t.coeff}, {"param", t.param}});
    }
    pieces.push_back({{"start", p.start}, {"terms", terms}});
  }
  j["pieces"] = pieces;
  if (!phi.finite_everywhere()) j["finite_up_to"] = phi.finite_up_to();
  return j;
}

YoungFunction young_function_from_json(const json& j) {
  try {
    if (!j.is_object()) throw FormatError("Young function descriptor must be an object");
    const auto kind = j.at("kind").get<std::string>();
    const auto params = number_list(j.value("params", json::array()));
    if (is_builtin_name(kind)) return make_builtin(kind, params);
    auto nodes = [&]() {
      return params.empty() ? 32 : static_cast<int>(params[0]);
    };
    if (kind == "smooth_equivalent") {
      return smooth_equivalent(young_function_from_json(j.at("base")), nodes());
    }
    if (kind == "strictly_convex_equivalent") {
      return strictly_convex_equivalent(young_function_from_json(j.at("base")), nodes());
    }
    if (kind == "exp_convolution") {
      return YoungFunction::exp_convolution_only(young_function_from_json(j.at("base")),
                                                 nodes());
    }
    std::vector<Piece> pieces;
    for (const auto& pj : j.at("pieces")) {
      Piece p;
      p.start = json_number(pj.at("start"));
      for (const auto& tj : pj.at("terms")) {
        p.terms.push_back(Term{form_from_name(tj.at("form").get<std::string>()),
                               json_number(tj.at("coeff")),
                               json_number(tj.value("param", json(0.0)))});
      }
      pieces.push_back(std::move(p));
    }
    const double finite_up_to = j.contains("finite_up_to")
                                    ? json_number(j.at("finite_up_to"))
                                    : YoungFunction::INFINITY_MARKER;
    return YoungFunction::piecewise(std::move(pieces), kind, params, finite_up_to);
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad Young function descriptor: ") + e.what());
  }
}

json to_json(const ExponentReport& r) {
  return {{"p_phi", r.p_phi},
          {"q_phi", r.q_phi},
          {"arg_sup", r.arg_sup},
          {"arg_inf", r.arg_inf},
          {"sup_is_limit", r.sup_is_limit},
          {"inf_is_limit", r.inf_is_limit},
          {"side_mismatch", r.side_mismatch},
          {"delta2",
           {{"satisfied", r.delta2.satisfied},
            {"constant", r.delta2.constant},
            {"top_decade_slope", r.delta2.top_decade_slope}}},
          {"lambda",
           {{"satisfied", r.lambda.satisfied},
            {"exponent", r.lambda.exponent},
            {"worst_ratio", r.lambda.worst_ratio}}},
          {"strict", r.strict()},
          {"grid",
           {{"t_min", r.grid.t_min},
            {"t_max", r.grid.t_max},
            {"n_points", r.grid.n_points},
            {"spacing", r.grid.spacing == Spacing::log ? "log" : "linear"}}}};
}

json to_json(const NormResult& r) {
  return {{"value", r.value},
          {"modular_at_value", r.modular_at_value},
          {"bisection_iters", r.bisection_iters},
          {"tolerance", r.tolerance}};
}

json to_json(const ThresholdReport& r) {
  return {{"d", r.dim},
          {"p_phi", r.p_phi},
          {"q_phi", r.q_phi},
          {"threshold", r.threshold},
          {"window", {r.window.p0, r.window.p1}},
          {"admissible", r.admissible}};
}

json to_json(const PhaseReport& r) {
  return {{"det_lower_bound", r.det_lower_bound},
          {"homogeneity_residual", r.homogeneity_residual},
          {"xi_gradient_ratio", {r.xi_gradient_ratio_min, r.xi_gradient_ratio_max}},
          {"x_gradient_ratio", {r.x_gradient_ratio_min, r.x_gradient_ratio_max}},
          {"growth", r.growth},
          {"probe_count", r.probe_count},
          {"acceptable", r.acceptable()}};
}

json to_json(const MultiIndex& a, int dim) {
  json x = json::array(), xi = json::array();
  for (int i = 0; i < dim; ++i) {
    x.push_back(a.x[i]);
    xi.push_back(a.xi[i]);
  }
  return {{"x", x}, {"xi", xi}};
}

json to_json(const MihlinResult& r) {
  json table = json::array();
  for (const auto& e : r.table) {
    table.push_back({{"alpha", e.alpha.xi_order()},
                     {"index", {e.alpha.xi[0], e.alpha.xi[1]}},
                     {"sup", e.sup}});
  }
  return {{"table", table}, {"max", r.max}};
}

json to_json(const HormanderResult& r) {
  json table = json::array();
  for (const auto& e : r.table) {
    table.push_back({{"alpha", e.alpha.xi_order()},
                     {"index", {e.alpha.xi[0], e.alpha.xi[1]}},
                     {"R", e.radius},
                     {"value", e.value},
                     {"negative_side", e.negative_side},
                     {"positive_side", e.positive_side}});
  }
  return {{"table", table}, {"max", r.max}};
}

json to_json(const SeminormResult& r) {
  return {{"value", r.value},
          {"x_slope", r.x_slope},
          {"xi_slope", r.xi_slope},
          {"finite", r.finite},
          {"probe_count", r.probe_count}};
}

json to_json(const SqueezingConstants& r) {
  return {{"c_low_small", r.c_low_small},
          {"c_up_small", r.c_up_small},
          {"c_low_large", r.c_low_large},
          {"c_up_large", r.c_up_large}};
}

json to_json(const EquivalenceResult& r) {
  return {{"equivalent", r.equivalent},
          {"constant", r.constant},
          {"low_decade_slope", r.low_decade_slope},
          {"top_decade_slope", r.top_decade_slope}};
}

json to_json(const FamilyConfig& cfg) {
  json kinds = json::array();
  for (FamilyKind k : cfg.kinds) kinds.push_back(to_string(k));
  return {{"kinds", kinds}, {"count", cfg.count}, {"seed", cfg.seed}};
}

FamilyConfig family_config_from_json(const json& j) {
  FamilyConfig cfg;
  try {
    if (j.contains("kinds")) {
      cfg.kinds.clear();
      for (const auto& k : j.at("kinds")) {
        cfg.kinds.push_back(family_kind_from_string(k.get<std::string>()));
      }
    }
    cfg.count = j.value("count", cfg.count);
    cfg.seed = j.value("seed", cfg.seed);
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad family config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

}  // namespace orlicz
