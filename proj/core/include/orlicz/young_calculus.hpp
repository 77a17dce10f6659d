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
#include <cstdint>
#include <vector>

#include "orlicz/young_function.hpp"

namespace orlicz {

enum class Spacing { log, linear };

/// Sampling grid on (0, inf) used by every scan.
struct GridConfig {
  double t_min = 1e-6;
  double t_max = 1e6;
  std::size_t n_points = 100000;
  Spacing spacing = Spacing::log;

  /// Throws PreconditionError unless 0 < t_min < t_max and n_points >= 2.
  void validate() const;
  std::vector<double> points() const;
};

/// Arguments above this are treated as divergent exponents.
inline constexpr double kExponentDivergence = 1e3;

struct Delta2Result {
  bool satisfied = false;
  double constant = 0.0;  ///< sup over the grid of Phi(2t)/Phi(t)
  double top_decade_slope = 0.0;
};

struct LambdaResult {
  bool satisfied = false;
  double worst_ratio = 0.0;  ///< sup of Phi(ct) / (c^p Phi(t))
  double exponent = 0.0;
};

/// Upper/lower Lebesgue exponents with their witnesses and the Delta_2 and
/// Lambda verdicts.
struct ExponentReport {
  double p_phi = 0.0;
  double q_phi = 0.0;
  /// Where the sup / inf is attained; 0 or +inf when it is the limit at
  /// the corresponding end of (0, inf).
  double arg_sup = 0.0;
  double arg_inf = 0.0;
  bool sup_is_limit = false;
  bool inf_is_limit = false;
  /// Largest disagreement between left and right elasticities on grid
  /// points that are not breakpoints.
  double side_mismatch = 0.0;
  Delta2Result delta2;
  LambdaResult lambda;
  GridConfig grid;

  bool strict() const { return delta2.satisfied && lambda.satisfied; }
};

struct SqueezingConstants {
  double c_low_small = 0.0;  ///< c t^{p_Phi} <= Phi(t) on (0, r1]
  double c_up_small = 0.0;   ///< Phi(t) <= C t^{q_Phi} on (0, r1]
  double c_low_large = 0.0;  ///< c t^{q_Phi} <= Phi(t) on [r2, inf)
  double c_up_large = 0.0;   ///< Phi(t) <= C t^{p_Phi} on [r2, inf)
};

struct EquivalenceResult {
  bool equivalent = false;
  double constant = 0.0;
  double low_decade_slope = 0.0;
  double top_decade_slope = 0.0;
};

/// p_Phi and q_Phi: max / min of t Phi'_+(t) / Phi(t) over the grid (with
/// breakpoints inserted) together with the exact limits at 0+ and infinity.
ExponentReport compute_exponents(const YoungFunction& phi,
                                 const GridConfig& cfg = {});

/// Phi(2t) <= C Phi(t): C from the grid scan, satisfied when C is finite and
/// the least-squares slope of log(Phi(2t)/Phi(t)) over the top decade is
/// below 0.01.
Delta2Result check_delta2(const YoungFunction& phi, const GridConfig& cfg = {});

/// Phi(ct) <= c^p Phi(t) scanned over c in (0, 1] and the grid. Always
/// unsatisfied for p <= 1.
LambdaResult check_lambda(const YoungFunction& phi, const GridConfig& cfg,
                          double p, double tol = 1e-9);

SqueezingConstants check_squeezing(const YoungFunction& phi,
                                   const ExponentReport& report, double r1,
                                   double r2);

EquivalenceResult check_equivalence(const YoungFunction& phi1,
                                    const YoungFunction& phi2,
                                    const GridConfig& cfg = {});

/// Smooth Psi <= Phi equivalent to Phi. Requires Delta_2.
YoungFunction smooth_equivalent(const YoungFunction& phi, int mollifier_nodes);

/// Strictly convex Phi + Psi equivalent to Phi. Requires q_Phi > 1.
YoungFunction strictly_convex_equivalent(const YoungFunction& phi,
                                         int quad_nodes);

/// First moment of the discrete mollifier used by smooth_equivalent.
double mollifier_first_moment(int nodes);

/// min over uniformly spaced triples on [a, b] of
/// Phi(t-h) - 2 Phi(t) + Phi(t+h).
double min_second_difference(const YoungFunction& phi, double a, double b,
                             std::size_t n_points);

/// Sampled structural check of a Young function: Phi(0) = 0, monotone on the
/// grid, midpoint convexity on random pairs and ordered one-sided
/// derivatives. Returns the number of violations found.
struct StructureReport {
  std::size_t monotonicity_violations = 0;
  std::size_t convexity_violations = 0;
  std::size_t derivative_order_violations = 0;
  double value_at_zero = 0.0;
  bool ok() const {
    return monotonicity_violations == 0 && convexity_violations == 0 &&
           derivative_order_violations == 0 && value_at_zero == 0.0;
  }
};
StructureReport check_structure(const YoungFunction& phi, const GridConfig& cfg,
                                std::size_t random_pairs, std::uint64_t seed);

}  // namespace orlicz
