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
#include "orlicz/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

constexpr double kStrictQTolerance = 1e-6;

void require_dim(int dim) {
  if (dim < 1) throw PreconditionError("dimension must be >= 1");
}

}  // namespace

void require_strict_exponents(double p_phi, double q_phi) {
  const bool q_ok = q_phi > 1.0 + kStrictQTolerance;
  const bool p_ok = std::isfinite(p_phi) && p_phi < kExponentDivergence;
  if (q_ok && p_ok) return;
  std::ostringstream msg;
  msg << "Young function is not strict:";
  if (!p_ok) msg << " Delta_2 fails (p_Phi = " << p_phi << ")";
  if (!q_ok) msg << " Lambda fails (q_Phi = " << q_phi << " is not > 1)";
  throw NotStrictError(msg.str());
}

InterpolationWindow interpolation_window(double p_phi, double q_phi,
                                         double margin) {
  if (!(margin > 0.0)) throw PreconditionError("margin must be positive");
  require_strict_exponents(p_phi, q_phi);
  InterpolationWindow w;
  w.p0 = std::max(1.0 + 0.5 * margin, q_phi - margin);
  if (!(w.p0 < q_phi)) w.p0 = 0.5 * (1.0 + q_phi);
  w.p1 = p_phi + margin;
  return w;
}

InterpolationWindow interpolation_window(const ExponentReport& report,
                                         double margin) {
  return interpolation_window(report.p_phi, report.q_phi, margin);
}

double fio_threshold(int dim, double p_phi, double q_phi) {
  require_dim(dim);
  require_strict_exponents(p_phi, q_phi);
  const double dev = std::max(std::abs(1.0 / p_phi - 0.5), std::abs(1.0 / q_phi - 0.5));
  return -static_cast<double>(dim - 1) * dev;
}

double fio_threshold(int dim, const ExponentReport& report) {
  return fio_threshold(dim, report.p_phi, report.q_phi);
}

bool check_fio_orders(double m, double mu, int dim, double p_phi, double q_phi) {
  const double t = fio_threshold(dim, p_phi, q_phi);
  return m < t && mu < t;
}

bool check_fio_orders(double m, double mu, int dim, const ExponentReport& report) {
  return check_fio_orders(m, mu, dim, report.p_phi, report.q_phi);
}

bool check_lp_fio_orders(double m, double mu, int dim, double p) {
  require_dim(dim);
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw PreconditionError("L^p order check needs p in (1, inf)");
  }
  const double t = -static_cast<double>(dim - 1) * std::abs(1.0 / p - 0.5);
  return m <= t && mu <= t;
}

ThresholdReport make_threshold_report(int dim, const ExponentReport& report,
                                      double margin) {
  ThresholdReport out;
  out.dim = dim;
  out.p_phi = report.p_phi;
  out.q_phi = report.q_phi;
  out.threshold = fio_threshold(dim, report);
  out.window = interpolation_window(report, margin);
  out.admissible = out.window.p0 > 1.0 && out.window.p0 < out.q_phi &&
                   out.q_phi <= out.p_phi && out.p_phi < out.window.p1;
  return out;
}

std::optional<InterpolationWindow> select_lp_exponents(double m, double mu,
                                                       int dim, double p_phi,
                                                       double q_phi,
                                                       double margin) {
  if (!check_fio_orders(m, mu, dim, p_phi, q_phi)) return std::nullopt;
  for (double delta = margin; delta > std::ldexp(1.0, -40); delta *= 0.5) {
    InterpolationWindow w{q_phi - delta, p_phi + delta};
    if (!(w.p0 > 1.0)) continue;
    if (check_lp_fio_orders(m, mu, dim, w.p0) &&
        check_lp_fio_orders(m, mu, dim, w.p1)) {
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace orlicz
