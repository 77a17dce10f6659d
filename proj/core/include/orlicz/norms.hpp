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

#include <functional>

#include "orlicz/grid_function.hpp"
#include "orlicz/young_function.hpp"

namespace orlicz {

struct NormResult {
  double value = 0.0;
  /// Modular (Luxemburg) or sup-functional (weak) at `value`.
  double modular_at_value = 0.0;
  int bisection_iters = 0;
  double tolerance = 0.0;
};

/// Relative bracket width at which the norm bisections stop.
inline constexpr double kNormTolerance = 1e-10;

/// |{x : |f(x)| > t}| by cell counting.
double distribution_function(const GridFunction& f, double t);

/// (sum |f|^p cellvol)^{1/p}; max |f| for p = inf.
double lp_norm(const GridFunction& f, double p);

/// sup over sample levels v of v * |{|f| >= v}|^{1/p}.
double weak_lp_norm(const GridFunction& f, double p);

/// M(lambda) = sum Phi(|f| / lambda) cellvol.
double luxemburg_modular(const GridFunction& f, const YoungFunction& phi,
                         double lambda);

/// sup over sample levels v of Phi(v / lambda) |{|f| >= v}|.
double weak_orlicz_functional(const GridFunction& f, const YoungFunction& phi,
                              double lambda);

/// inf{lambda > 0 : M(lambda) <= 1} by bisection.
NormResult luxemburg_norm(const GridFunction& f, const YoungFunction& phi,
                          double rel_tol = kNormTolerance);

/// inf{lambda > 0 : sup_t Phi(t/lambda) mu_f(t) <= 1} by bisection.
NormResult weak_orlicz_norm(const GridFunction& f, const YoungFunction& phi,
                            double rel_tol = kNormTolerance);

/// Smallest lambda in a bracket around [lo, hi] with functional(lambda) <= 1,
/// for a non-increasing functional. The bracket is widened by doubling or
/// halving up to 60 times; failure throws DivergenceError.
NormResult bisect_scale(const std::function<double(double)>& functional,
                        double lo, double hi, double rel_tol);

}  // namespace orlicz
