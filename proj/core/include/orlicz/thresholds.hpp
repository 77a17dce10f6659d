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

#include <optional>
#include <utility>

#include "orlicz/young_calculus.hpp"

namespace orlicz {

inline constexpr double kDefaultMargin = 0.1;

struct InterpolationWindow {
  double p0 = 0.0;
  double p1 = 0.0;
};

struct ThresholdReport {
  int dim = 1;
  double p_phi = 0.0;
  double q_phi = 0.0;
  double threshold = 0.0;  ///< -(d-1) max(|1/p - 1/2|, |1/q - 1/2|)
  InterpolationWindow window;
  bool admissible = false;
};

/// Throws NotStrictError unless q > 1 and p is finite.
void require_strict_exponents(double p_phi, double q_phi);

/// p0 = max(1 + margin/2, q - margin) clamped into (1, q), p1 = p + margin.
InterpolationWindow interpolation_window(const ExponentReport& report,
                                         double margin = kDefaultMargin);
InterpolationWindow interpolation_window(double p_phi, double q_phi,
                                         double margin = kDefaultMargin);

double fio_threshold(int dim, const ExponentReport& report);
double fio_threshold(int dim, double p_phi, double q_phi);

/// m < T and mu < T (strict).
bool check_fio_orders(double m, double mu, int dim, const ExponentReport& report);
bool check_fio_orders(double m, double mu, int dim, double p_phi, double q_phi);

/// m <= -(d-1)|1/p - 1/2| and the same for mu (non-strict), p in (1, inf).
bool check_lp_fio_orders(double m, double mu, int dim, double p);

ThresholdReport make_threshold_report(int dim, const ExponentReport& report,
                                      double margin = kDefaultMargin);

/// Exponents p0 < q_Phi and p1 > p_Phi (p0 > 1) at which the L^p order
/// condition holds, found by shrinking the window; nullopt when none is
/// found above 2^-40.
std::optional<InterpolationWindow> select_lp_exponents(
    double m, double mu, int dim, double p_phi, double q_phi,
    double margin = kDefaultMargin);

}  // namespace orlicz
