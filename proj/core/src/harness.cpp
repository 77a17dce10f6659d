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
#include "orlicz/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/json_io.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/parallel.hpp"
#include "orlicz/symbol_conditions.hpp"

namespace orlicz {
namespace {

using nlohmann::json;

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

std::vector<double> numbers(const json& j) {
  std::vector<double> out;
  for (const auto& v : j) out.push_back(json_number(v));
  return out;
}

void require_strict(const ExponentReport& r) {
  if (r.strict()) return;
  std::ostringstream msg;
  msg.precision(6);
  msg << "Young function is not strict:";
  if (!r.delta2.satisfied) {
    msg << " Delta_2 fails (p_Phi = " << r.p_phi << ", ratio Phi(2t)/Phi(t) grows)";
  }
  if (!r.lambda.satisfied) {
    msg << " Lambda fails (q_Phi = " << r.q_phi
        << " is not > 1, no p > 1 with Phi(ct) <= c^p Phi(t))";
  }
  throw NotStrictError(msg.str());
}

double safe_ratio(double num, double den) {
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return num / den;
}

double trend(double fine, double coarse) {
  if (coarse == 0.0 && fine == 0.0) return 0.0;
  return std::log2(fine / coarse);
}

GridRun measure(const ExperimentSpec& spec, const YoungFunction& phi,
                const SymbolDescriptor& a, const std::optional<ValidatedPhase>& phase,
                std::size_t n) {
  const auto family = generate_family(spec.family, spec.dim, spec.extent, n);
  GridRun run;
  run.n = n;
  run.members.resize(family.size());
  parallel_for(family.size(), [&](std::size_t i) {
    const GridFunction& f = family[i].f;
    const GridFunction tf = apply_operator(spec, a, phase, f);
    MemberRatio r;
    r.label = family[i].label;
    r.luxemburg_ratio =
        safe_ratio(luxemburg_norm(tf, phi).value, luxemburg_norm(f, phi).value);
    if (spec.weak_orlicz) {
      r.weak_ratio =
          safe_ratio(weak_orlicz_norm(tf, phi).value, weak_orlicz_norm(f, phi).value);
    }
    for (double p : spec.lp) r.lp_ratios.push_back(safe_ratio(lp_norm(tf, p), lp_norm(f, p)));
    run.members[i] = std::move(r);
  });
  run.lp_sup.assign(spec.lp.size(), 0.0);
  for (const auto& r : run.members) {
    run.sup_ratio = std::max(run.sup_ratio, r.luxemburg_ratio);
    run.weak_sup_ratio = std::max(run.weak_sup_ratio, r.weak_ratio);
    for (std::size_t k = 0; k < r.lp_ratios.size(); ++k) {
      run.lp_sup[k] = std::max(run.lp_sup[k], r.lp_ratios[k]);
    }
  }
  return run;
}

json conditions_for(const ExperimentSpec& spec, const SymbolDescriptor& a,
                    const std::optional<ValidatedPhase>& phase) {
  json c;
  switch (spec.op) {
    case OperatorKind::multiplier: {
      const auto mihlin = mihlin_functional(a, spec.dim);
      const auto horm = hormander_functional(a, spec.dim);
      c["mihlin_max"] = mihlin.max;
      c["hormander_max"] = horm.max;
      break;
    }
    case OperatorKind::psdo_kn:
    case OperatorKind::psdo_general: {
      const auto s = hormander_class_seminorm(a, 0.0, 1.0, 0.0, 2);
      c["hormander_class_S0_1_0"] = to_json(s);
      break;
    }
    case OperatorKind::fio: {
      c["sg_seminorm"] = to_json(sg_seminorm(a, spec.m, spec.mu, 1));
      c["phase"] = to_json(phase->report());
      break;
    }
  }
  return c;
}

}  // namespace

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::multiplier:
      return "multiplier";
    case OperatorKind::psdo_kn:
      return "psdo-kn";
    case OperatorKind::psdo_general:
      return "psdo-general";
    case OperatorKind::fio:
      return "fio";
  }
  return "unknown";
}

OperatorKind operator_kind_from_string(const std::string& name) {
  if (name == "multiplier") return OperatorKind::multiplier;
  if (name == "psdo-kn") return OperatorKind::psdo_kn;
  if (name == "psdo-general" || name == "psdo") return OperatorKind::psdo_general;
  if (name == "fio") return OperatorKind::fio;
  throw PreconditionError("unknown operator '" + name + "'");
}

void ExperimentSpec::validate() const {
  if (dim != 1 && dim != 2) throw PreconditionError("experiments support d = 1 or 2");
  if (!power_of_two(n)) throw PreconditionError("grid n must be a power of two");
  if (!(extent > 0.0)) throw PreconditionError("grid extent must be positive");
  family.validate();
  const auto names = symbol_catalog();
  if (std::find(names.begin(), names.end(), symbol) == names.end()) {
    throw PreconditionError("unknown symbol '" + symbol + "'");
  }
  if (op == OperatorKind::fio) {
    const auto phases = phase_catalog();
    if (std::find(phases.begin(), phases.end(), phase) == phases.end()) {
      throw PreconditionError("unknown phase '" + phase + "'");
    }
  }
  for (double p : lp) {
    if (!(p > 0.0)) throw PreconditionError("L^p exponents must be positive");
  }
}

ExperimentSpec experiment_spec_from_json(const json& j) {
  ExperimentSpec s;
  try {
    s.op = operator_kind_from_string(j.at("operator").get<std::string>());
    const auto& sym = j.at("symbol");
    if (sym.is_string()) {
      s.symbol = sym.get<std::string>();
    } else {
      s.symbol = sym.at("name").get<std::string>();
      if (sym.contains("params")) s.symbol_params = numbers(sym.at("params"));
      if (sym.contains("cutoff")) s.cutoff = json_number(sym.at("cutoff"));
    }
    if (j.contains("quantization")) s.quantization = json_number(j.at("quantization"));
    if (j.contains("phase")) {
      const auto& ph = j.at("phase");
      if (ph.is_string()) {
        s.phase = ph.get<std::string>();
      } else {
        s.phase = ph.at("name").get<std::string>();
        if (ph.contains("params")) s.phase_params = numbers(ph.at("params"));
      }
    }
    if (j.contains("orders")) {
      s.m = json_number(j.at("orders").value("m", json(0.0)));
      s.mu = json_number(j.at("orders").value("mu", json(0.0)));
    }
    s.phi = j.at("phi");
    if (j.contains("family")) s.family = family_config_from_json(j.at("family"));
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      s.dim = g.value("dim", s.dim);
      if (g.contains("extent")) s.extent = json_number(g.at("extent"));
      s.n = g.value("n", s.dim == 2 ? std::size_t{128} : s.n);
    }
    if (j.contains("norms")) {
      const auto& nm = j.at("norms");
      s.weak_orlicz = nm.value("weak_orlicz", true);
      if (nm.contains("lp")) s.lp = numbers(nm.at("lp"));
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad experiment spec: ") + e.what());
  }
  s.validate();
  return s;
}

json to_json(const ExperimentSpec& s) {
  json sym = {{"name", s.symbol}, {"params", s.symbol_params}};
  if (s.cutoff) sym["cutoff"] = *s.cutoff;
  return {{"operator", to_string(s.op)},
          {"symbol", sym},
          {"quantization", s.quantization},
          {"phase", {{"name", s.phase}, {"params", s.phase_params}}},
          {"orders", {{"m", s.m}, {"mu", s.mu}}},
          {"phi", s.phi},
          {"family", to_json(s.family)},
          {"grid", {{"dim", s.dim}, {"extent", s.extent}, {"n", s.n}}},
          {"norms", {{"weak_orlicz", s.weak_orlicz}, {"lp", s.lp}}}};
}

SymbolDescriptor spec_symbol(const ExperimentSpec& spec) {
  SymbolDescriptor a = make_symbol(spec.symbol, spec.dim, spec.symbol_params);
  if (spec.cutoff) a.support_cutoff = *spec.cutoff;
  return a;
}

GridFunction apply_operator(const ExperimentSpec& spec, const SymbolDescriptor& a,
                            const std::optional<ValidatedPhase>& phase,
                            const GridFunction& f) {
  switch (spec.op) {
    case OperatorKind::multiplier:
      return apply_multiplier(a, f);
    case OperatorKind::psdo_kn:
      return apply_psdo_kn(a, f);
    case OperatorKind::psdo_general:
      return apply_psdo_general(a, QuantizationMatrix::scalar(spec.dim, spec.quantization), f);
    case OperatorKind::fio:
      if (!phase) throw PreconditionError("FIO needs a validated phase");
      return apply_fio(a, *phase, f);
  }
  throw PreconditionError("unknown operator");
}

BoundednessReport run_boundedness(const ExperimentSpec& spec) {
  spec.validate();
  const YoungFunction phi = young_function_from_json(spec.phi);
  BoundednessReport rep;
  rep.exponents = compute_exponents(phi);
  require_strict(rep.exponents);
  rep.thresholds = make_threshold_report(spec.dim, rep.exponents);

  const SymbolDescriptor a = spec_symbol(spec);
  std::optional<ValidatedPhase> phase;
  if (spec.op == OperatorKind::fio) {
    rep.fio_orders_ok = check_fio_orders(spec.m, spec.mu, spec.dim, rep.exponents);
    if (!*rep.fio_orders_ok) {
      std::ostringstream msg;
      msg << "FIO orders m = " << spec.m << ", mu = " << spec.mu
          << " must lie strictly below the threshold " << rep.thresholds.threshold;
      throw OrderViolationError(msg.str());
    }
    phase = ValidatedPhase::accept(make_phase(spec.phase, spec.dim, spec.phase_params));
  }
  const std::size_t fine_n = 2 * spec.n;
  if (spec.op == OperatorKind::psdo_general && fine_n > kPsdoGeneralMaxN) {
    throw ResourceError("psdo-general refinement needs 2n <= 512");
  }
  if (spec.op == OperatorKind::fio && fine_n > kFioMaxN) {
    throw ResourceError("fio refinement needs 2n <= 1024");
  }
  rep.conditions = conditions_for(spec, a, phase);
  rep.coarse = measure(spec, phi, a, phase, spec.n);
  rep.fine = measure(spec, phi, a, phase, fine_n);
  rep.trend_slope = trend(rep.fine.sup_ratio, rep.coarse.sup_ratio);
  rep.weak_trend_slope = trend(rep.fine.weak_sup_ratio, rep.coarse.weak_sup_ratio);
  for (std::size_t k = 0; k < spec.lp.size(); ++k) {
    rep.lp_trend_slopes.push_back(trend(rep.fine.lp_sup[k], rep.coarse.lp_sup[k]));
  }
  rep.bounded = std::isfinite(rep.coarse.sup_ratio) &&
                std::isfinite(rep.fine.sup_ratio) && rep.trend_slope < kTrendTolerance;
  return rep;
}

json to_json(const BoundednessReport& r) {
  auto run_json = [](const GridRun& g) {
    json members = json::array();
    for (const auto& m : g.members) {
      members.push_back({{"label", m.label},
                         {"luxemburg_ratio", m.luxemburg_ratio},
                         {"weak_ratio", m.weak_ratio},
                         {"lp_ratios", m.lp_ratios}});
    }
    return json{{"n", g.n},
                {"members", members},
                {"sup_ratio", g.sup_ratio},
                {"weak_sup_ratio", g.weak_sup_ratio},
                {"lp_sup", g.lp_sup}};
  };
  json j = {{"schema_version", kSchemaVersion},
            {"exponents", to_json(r.exponents)},
            {"thresholds", to_json(r.thresholds)},
            {"conditions", r.conditions},
            {"coarse", run_json(r.coarse)},
            {"fine", run_json(r.fine)},
            {"trend_slope", r.trend_slope},
            {"weak_trend_slope", r.weak_trend_slope},
            {"lp_trend_slopes", r.lp_trend_slopes},
            {"bounded", r.bounded}};
  if (r.fio_orders_ok) j["fio_orders_ok"] = *r.fio_orders_ok;
  return j;
}

}  // namespace orlicz
