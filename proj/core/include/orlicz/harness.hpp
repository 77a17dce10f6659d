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
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orlicz/family.hpp"
#include "orlicz/operators.hpp"
#include "orlicz/thresholds.hpp"
#include "orlicz/young_calculus.hpp"

namespace orlicz {

enum class OperatorKind { multiplier, psdo_kn, psdo_general, fio };

std::string to_string(OperatorKind kind);
OperatorKind operator_kind_from_string(const std::string& name);

struct ExperimentSpec {
  OperatorKind op = OperatorKind::multiplier;
  std::string symbol = "identity";
  std::vector<double> symbol_params;
  std::optional<double> cutoff;
  double quantization = 0.0;  ///< A = s I for psdo-general
  std::string phase = "flat";
  std::vector<double> phase_params;
  double m = 0.0;   ///< declared SG orders (fio)
  double mu = 0.0;
  nlohmann::json phi = {{"kind", "power"}, {"params", {2.0}}};
  FamilyConfig family;
  int dim = 1;
  double extent = 8.0;
  std::size_t n = 256;
  bool weak_orlicz = true;
  std::vector<double> lp;

  /// Throws PreconditionError for unknown catalog entries or a grid size
  /// that is not a power of two.
  void validate() const;
};

ExperimentSpec experiment_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentSpec& spec);

/// Builds the catalog symbol of a spec, cutoff included.
SymbolDescriptor spec_symbol(const ExperimentSpec& spec);

/// Applies the operator of `spec` to f.
GridFunction apply_operator(const ExperimentSpec& spec, const SymbolDescriptor& a,
                            const std::optional<ValidatedPhase>& phase,
                            const GridFunction& f);

struct MemberRatio {
  std::string label;
  double luxemburg_ratio = 0.0;
  double weak_ratio = 0.0;
  std::vector<double> lp_ratios;
};

struct GridRun {
  std::size_t n = 0;
  std::vector<MemberRatio> members;
  double sup_ratio = 0.0;
  double weak_sup_ratio = 0.0;
  std::vector<double> lp_sup;
};

struct BoundednessReport {
  ExponentReport exponents;
  ThresholdReport thresholds;
  std::optional<bool> fio_orders_ok;
  nlohmann::json conditions;
  GridRun coarse;
  GridRun fine;
  /// log2(sup at 2n / sup at n)
  double trend_slope = 0.0;
  double weak_trend_slope = 0.0;
  std::vector<double> lp_trend_slopes;
  /// sup finite and trend_slope < 0.05
  bool bounded = false;
};

inline constexpr double kTrendTolerance = 0.05;

/// Gates on strictness of Phi (NotStrictError) and, for FIO specs, on the
/// order threshold (OrderViolationError) and phase validity
/// (PreconditionError), then measures norm ratios over the family at n and
/// 2n.
BoundednessReport run_boundedness(const ExperimentSpec& spec);

nlohmann::json to_json(const BoundednessReport& r);

}  // namespace orlicz
