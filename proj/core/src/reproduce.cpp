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
#include "orlicz/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/errors.hpp"
#include "orlicz/family.hpp"
#include "orlicz/json_io.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/operators.hpp"
#include "orlicz/young_calculus.hpp"

namespace orlicz {
namespace {

constexpr const char* kReference = "reference-value";
constexpr const char* kClosedForm = "closed-form";
constexpr const char* kOracle = "oracle-comparison";

Measurement near(std::string name, double measured, double expected, double tol,
                 const char* basis) {
  return {std::move(name), measured, expected, tol, Comparison::near, basis,
          std::abs(measured - expected) <= tol};
}

Measurement at_most(std::string name, double measured, double bound, double tol,
                    const char* basis) {
  return {std::move(name), measured, bound, tol, Comparison::at_most, basis,
          measured <= bound + tol};
}

Measurement greater_than(std::string name, double measured, double bound,
                         const char* basis) {
  return {std::move(name), measured, bound, 0.0, Comparison::greater_than, basis,
          measured > bound};
}

Measurement holds(std::string name, bool ok, const char* basis) {
  return {std::move(name), ok ? 1.0 : 0.0, 1.0, 0.0, Comparison::holds, basis, ok};
}

std::vector<double> log_samples(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return out;
}

// Number of samples with Psi(t) > Phi(t) (relative slack 1e-12).
double dominance_violations(const YoungFunction& psi, const YoungFunction& phi) {
  std::size_t bad = 0;
  for (double t : log_samples(1e-3, 1e3, 10000)) {
    if (psi(t) > phi(t) * (1.0 + 1e-12)) ++bad;
  }
  return static_cast<double>(bad);
}

std::vector<Measurement> counterexample_case() {
  const auto r = compute_exponents(make_builtin(Builtin::counterexample));
  return {near("q_phi", r.q_phi, 4.0 / 3.0, 1e-3, kReference),
          near("p_phi", r.p_phi, 2.0, 1e-3, kOracle)};
}

std::vector<Measurement> entropy_case() {
  const YoungFunction phi = make_builtin(Builtin::entropy);
  const auto r = compute_exponents(phi);
  return {near("q_phi", r.q_phi, 1.0, 1e-3, kReference),
          greater_than("min_second_difference", min_second_difference(phi, 1e-3, 10.0, 1000),
                       0.0, kClosedForm)};
}

std::vector<Measurement> delta2_case() {
  double mismatches = 0.0;
  for (const auto& row : characterize_library()) {
    const bool p_finite = std::isfinite(row.p_phi) && row.p_phi < kExponentDivergence;
    if (row.delta2 != p_finite) mismatches += 1.0;
  }
  return {near("delta2_vs_p_finite_mismatches", mismatches, 0.0, 0.0, kReference)};
}

std::vector<Measurement> lambda_case() {
  double mismatches = 0.0;
  for (const auto& row : characterize_library()) {
    const bool q_above = row.q_phi > 1.0 + 1e-6;
    if (row.lambda_below_q != q_above) mismatches += 1.0;
  }
  return {near("lambda_vs_q_above_one_mismatches", mismatches, 0.0, 0.0, kReference)};
}

std::vector<Measurement> squeezing_case() {
  std::vector<Measurement> out;
  const YoungFunction sq = make_builtin(Builtin::power, std::vector<double>{2.0});
  const auto c = check_squeezing(sq, compute_exponents(sq), 1.0, 1.0);
  out.push_back(near("power2_c_low_small", c.c_low_small, 1.0, 1e-12, kClosedForm));
  out.push_back(near("power2_c_up_small", c.c_up_small, 1.0, 1e-12, kClosedForm));
  out.push_back(near("power2_c_low_large", c.c_low_large, 1.0, 1e-12, kClosedForm));
  out.push_back(near("power2_c_up_large", c.c_up_large, 1.0, 1e-12, kClosedForm));

  const YoungFunction ce = make_builtin(Builtin::counterexample);
  const auto cc = check_squeezing(ce, compute_exponents(ce), 1.0, 2.0);
  const bool finite = std::isfinite(cc.c_low_small) && std::isfinite(cc.c_up_small) &&
                      std::isfinite(cc.c_low_large) && std::isfinite(cc.c_up_large);
  const bool positive = cc.c_low_small > 0.0 && cc.c_up_small > 0.0 &&
                        cc.c_low_large > 0.0 && cc.c_up_large > 0.0;
  out.push_back(holds("counterexample_constants_finite_positive", finite && positive,
                      kOracle));

  const YoungFunction en = make_builtin(Builtin::entropy);
  const auto ec = check_squeezing(en, compute_exponents(en), 1.0, 1.0);
  out.push_back(at_most("entropy_c_up_small", ec.c_up_small, std::log(2.0), 1e-12,
                        kClosedForm));
  return out;
}

std::vector<Measurement> smooth_case() {
  std::vector<Measurement> out;
  for (const auto& [name, phi] :
       {std::pair{std::string("power2"), make_builtin(Builtin::power, std::vector<double>{2.0})},
        std::pair{std::string("counterexample"), make_builtin(Builtin::counterexample)}}) {
    const YoungFunction psi = smooth_equivalent(phi, 64);
    out.push_back(near(name + "_dominance_violations", dominance_violations(psi, phi), 0.0,
                       0.0, kClosedForm));
    const auto eq = check_equivalence(psi, phi);
    out.push_back(holds(name + "_equivalent", eq.equivalent, kClosedForm));
    out.push_back(at_most(name + "_equivalence_constant", eq.constant, 4.0, 1e-9,
                          kClosedForm));
  }
  const YoungFunction lin = make_builtin(Builtin::power, std::vector<double>{1.0});
  const YoungFunction psi = smooth_equivalent(lin, 64);
  const double factor = 1.0 - 0.5 * mollifier_first_moment(64);
  double err = 0.0;
  for (double t : log_samples(1e-3, 1e3, 1000)) {
    err = std::max(err, std::abs(psi(t) - factor * t) / t);
  }
  out.push_back(near("linear_closed_form_rel_error", err, 0.0, 1e-12, kClosedForm));
  return out;
}

std::vector<Measurement> strict_convex_case() {
  std::vector<Measurement> out;
  const YoungFunction ce = make_builtin(Builtin::counterexample);
  const YoungFunction phi1 = strictly_convex_equivalent(ce, 32);
  const YoungFunction psi = YoungFunction::exp_convolution_only(ce, 32);
  out.push_back(near("psi_dominance_violations", dominance_violations(psi, ce), 0.0, 0.0,
                     kClosedForm));
  const auto eq = check_equivalence(phi1, ce);
  out.push_back(holds("equivalent", eq.equivalent, kClosedForm));
  out.push_back(at_most("equivalence_constant", eq.constant, 2.0, 1e-9, kClosedForm));
  out.push_back(greater_than("min_second_difference",
                             min_second_difference(phi1, 1e-3, 10.0, 2000), 0.0,
                             kClosedForm));
  const YoungFunction lin_psi = YoungFunction::exp_convolution_only(
      make_builtin(Builtin::power, std::vector<double>{1.0}), 32);
  double err = 0.0;
  for (std::size_t i = 0; i <= 2000; ++i) {
    const double t = 20.0 * static_cast<double>(i) / 2000.0;
    err = std::max(err, std::abs(lin_psi(t) - (t - 1.0 + std::exp(-t))));
  }
  out.push_back(near("linear_closed_form_error", err, 0.0, 1e-8, kClosedForm));
  return out;
}

std::vector<Measurement> transfer_case() {
  const double L = 8.0;
  const std::size_t n = 128;
  const auto f = GridFunction::sample(1, L, n, [](auto x) { return std::exp(-x[0] * x[0]); });
  const auto a1 = sample_symbol(make_symbol("windowed-x-xi", 1, {}), 1, L, n, 2);
  const auto A0 = QuantizationMatrix::scalar(1, 0.0);
  const auto Aw = QuantizationMatrix::scalar(1, 0.5);
  const auto a2 = transfer_quantization(a1, A0, Aw);
  const auto back = transfer_quantization(a2, Aw, A0);
  const auto same = transfer_quantization(a1, A0, A0);
  double round_trip = 0.0, identity = 0.0;
  for (std::size_t i = 0; i < a1.values.size(); ++i) {
    round_trip = std::max(round_trip, std::abs(back.values[i] - a1.values[i]));
    identity = std::max(identity, std::abs(same.values[i] - a1.values[i]));
  }
  const auto o1 = apply_psdo_general(as_descriptor(a1, "a1"), A0, f);
  const auto o2 = apply_psdo_general(as_descriptor(a2, "a2"), Aw, f);
  double diff = 0.0;
  for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(o1[i] - o2[i]));
  return {at_most("operator_output_discrepancy", diff, 0.0, 1e-4, kOracle),
          at_most("round_trip_error", round_trip, 0.0, 1e-9, kClosedForm),
          at_most("same_matrix_error", identity, 0.0, 1e-12, kClosedForm)};
}

std::vector<Measurement> weak_embed_case() {
  const auto family = generate_family(FamilyConfig{}, 1, 8.0, 256);
  double worst = -std::numeric_limits<double>::infinity();
  double worst_orlicz = 0.0;
  const YoungFunction ce = make_builtin(Builtin::counterexample);
  for (const auto& m : family) {
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
      worst = std::max(worst, weak_lp_norm(m.f, p) - lp_norm(m.f, p));
    }
    const double w = weak_orlicz_norm(m.f, ce).value;
    const double s = luxemburg_norm(m.f, ce).value;
    worst_orlicz = std::max(worst_orlicz, w / s);
  }
  return {at_most("max_weak_minus_strong_lp", worst, 0.0, 1e-12, kReference),
          at_most("max_weak_over_strong_orlicz", worst_orlicz, 1.0, 1e-6, kOracle)};
}

}  // namespace

std::vector<std::string> reproduce_catalog() {
  return {"counterexample-q43", "entropy-q1",    "delta2-iff-pfinite",
          "lambda-iff-q",       "squeezing",     "smooth-equiv",
          "strict-convex-equiv", "transfer",     "weak-embed"};
}

std::vector<std::pair<std::string, YoungFunction>> characterization_library() {
  auto power = [](double p) { return make_builtin(Builtin::power, std::vector<double>{p}); };
  return {{"power(1)", power(1.0)},
          {"power(1.5)", power(1.5)},
          {"power(2)", power(2.0)},
          {"power(3)", power(3.0)},
          {"affine(2)", make_builtin(Builtin::affine, std::vector<double>{2.0})},
          {"entropy", make_builtin(Builtin::entropy)},
          {"counterexample", make_builtin(Builtin::counterexample)},
          {"exp_minus_one", make_builtin(Builtin::exp_minus_one)}};
}

std::vector<CharacterizationRow> characterize_library() {
  std::vector<CharacterizationRow> rows;
  const GridConfig cfg;
  for (const auto& [name, phi] : characterization_library()) {
    const auto r = compute_exponents(phi, cfg);
    CharacterizationRow row;
    row.name = name;
    row.p_phi = r.p_phi;
    row.q_phi = r.q_phi;
    row.delta2 = check_delta2(phi, cfg).satisfied;
    row.lambda_below_q = check_lambda(phi, cfg, r.q_phi - 0.01).satisfied;
    rows.push_back(row);
  }
  return rows;
}

CaseReport reproduce_case(const std::string& id) {
  CaseReport rep;
  rep.id = id;
  if (id == "counterexample-q43") {
    rep.measurements = counterexample_case();
  } else if (id == "entropy-q1") {
    rep.measurements = entropy_case();
  } else if (id == "delta2-iff-pfinite") {
    rep.measurements = delta2_case();
  } else if (id == "lambda-iff-q") {
    rep.measurements = lambda_case();
  } else if (id == "squeezing") {
    rep.measurements = squeezing_case();
  } else if (id == "smooth-equiv") {
    rep.measurements = smooth_case();
  } else if (id == "strict-convex-equiv") {
    rep.measurements = strict_convex_case();
  } else if (id == "transfer") {
    rep.measurements = transfer_case();
  } else if (id == "weak-embed") {
    rep.measurements = weak_embed_case();
  } else {
    throw PreconditionError("unknown reproduce case '" + id + "'");
  }
  rep.passed = std::all_of(rep.measurements.begin(), rep.measurements.end(),
                           [](const Measurement& m) { return m.passed; });
  return rep;
}

nlohmann::json to_json(const CaseReport& r) {
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& m : r.measurements) {
    const char* cmp = "near";
    switch (m.comparison) {
      case Comparison::near:
        cmp = "near";
        break;
      case Comparison::at_most:
        cmp = "at_most";
        break;
      case Comparison::greater_than:
        cmp = "greater_than";
        break;
      case Comparison::holds:
        cmp = "holds";
        break;
    }
    ms.push_back({{"name", m.name},
                  {"measured", m.measured},
                  {"expected", m.expected},
                  {"tolerance", m.tolerance},
                  {"comparison", cmp},
                  {"basis", m.basis},
                  {"passed", m.passed}});
  }
  return {{"id", r.id}, {"passed", r.passed}, {"measurements", ms}};
}

}  // namespace orlicz
