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
#include "orlicz/young_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "orlicz/errors.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponent reports must resolve the exponents on at least this range.
constexpr double kRequiredLow = 1e-6;
constexpr double kRequiredHigh = 1e6;

void require_finite(const YoungFunction& phi) {
  if (!phi.finite_everywhere()) {
    throw PreconditionError(
        "Young function takes the value +inf at finite arguments");
  }
}

std::vector<double> grid_with_breakpoints(const YoungFunction& phi,
                                          const GridConfig& cfg) {
  std::vector<double> pts = cfg.points();
  for (double b : phi.breakpoints()) {
    if (b >= cfg.t_min && b <= cfg.t_max) pts.push_back(b);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double checked_log_value(const YoungFunction& phi, double t) {
  const double v = phi.log_value(t);
  if (v == -kInf) {
    throw DegenerateFunctionError("Phi vanishes at a positive argument");
  }
  return v;
}

// Slope of ys against log(xs) restricted to xs in [lo, hi].
double decade_slope(const std::vector<double>& ts, const std::vector<double>& ys,
                    double lo, double hi) {
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] >= lo && ts[i] <= hi) {
      if (!std::isfinite(ys[i])) return kInf;
      lx.push_back(std::log(ts[i]));
      ly.push_back(ys[i]);
    }
  }
  return least_squares_slope(lx, ly);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void GridConfig::validate() const {
  if (!(t_min > 0.0) || !(t_max > t_min) || !std::isfinite(t_max)) {
    throw PreconditionError("grid needs 0 < t_min < t_max < inf");
  }
  if (n_points < 2) throw PreconditionError("grid needs at least 2 points");
}

std::vector<double> GridConfig::points() const {
  validate();
  std::vector<double> pts(n_points);
  const double last = static_cast<double>(n_points - 1);
  if (spacing == Spacing::log) {
    const double ratio = std::log(t_max / t_min);
    for (std::size_t i = 0; i < n_points; ++i) {
      pts[i] = t_min * std::exp(ratio * static_cast<double>(i) / last);
    }
  } else {
    for (std::size_t i = 0; i < n_points; ++i) {
      pts[i] = t_min + (t_max - t_min) * static_cast<double>(i) / last;
    }
  }
  pts.front() = t_min;
  pts.back() = t_max;
  return pts;
}

Delta2Result check_delta2(const YoungFunction& phi, const GridConfig& cfg) {
  require_finite(phi);
  const auto ts = cfg.points();
  std::vector<double> log_ratio(ts.size());
  Delta2Result out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    log_ratio[i] = phi.log_value(2.0 * ts[i]) - checked_log_value(phi, ts[i]);
    out.constant = std::max(out.constant, std::exp(log_ratio[i]));
  }
  out.top_decade_slope =
      decade_slope(ts, log_ratio, cfg.t_max / 10.0, cfg.t_max);
  out.satisfied = std::isfinite(out.constant) && out.top_decade_slope < 0.01;
  return out;
}

LambdaResult check_lambda(const YoungFunction& phi, const GridConfig& cfg,
                          double p, double tol) {
  require_finite(phi);
  LambdaResult out;
  out.exponent = p;

  GridConfig sub = cfg;
  sub.n_points = std::min<std::size_t>(cfg.n_points, 1500);
  const auto ts = grid_with_breakpoints(phi, sub);

  constexpr std::size_t kScales = 121;
  std::vector<double> cs(kScales);
  for (std::size_t k = 0; k < kScales; ++k) {
    cs[k] = std::pow(10.0, -6.0 * static_cast<double>(k) / (kScales - 1));
  }

  double worst = 0.0;
  for (double t : ts) {
    const double log_phi_t = checked_log_value(phi, t);
    for (double c : cs) {
      const double lr = phi.log_value(c * t) - p * std::log(c) - log_phi_t;
      worst = std::max(worst, std::exp(lr));
    }
  }
  out.worst_ratio = worst;
  out.satisfied = p > 1.0 && worst <= 1.0 + tol;
  return out;
}

ExponentReport compute_exponents(const YoungFunction& phi,
                                 const GridConfig& cfg) {
  require_finite(phi);
  cfg.validate();
  if (cfg.t_min > kRequiredLow || cfg.t_max < kRequiredHigh) {
    throw PreconditionError("exponent grid must cover [1e-6, 1e6]");
  }
  const auto ts = grid_with_breakpoints(phi, cfg);

  ExponentReport report;
  report.grid = cfg;
  double grid_max = -kInf;
  double grid_min = kInf;
  double left_max = -kInf;
  double left_min = kInf;
  for (double t : ts) {
    checked_log_value(phi, t);
    const double e = phi.elasticity(t, Side::right);
    const double el = phi.elasticity(t, Side::left);
    if (e > grid_max) {
      grid_max = e;
      report.arg_sup = t;
    }
    if (e < grid_min) {
      grid_min = e;
      report.arg_inf = t;
    }
    left_max = std::max(left_max, el);
    left_min = std::min(left_min, el);
  }
  report.side_mismatch =
      std::max(std::abs(left_max - grid_max), std::abs(left_min - grid_min));
  if (!std::isfinite(report.side_mismatch)) report.side_mismatch = 0.0;

  const double at_zero = phi.index_at_zero();
  const double at_inf = phi.index_at_infinity();
  constexpr double kTie = 1e-12;

  report.p_phi = grid_max;
  if (std::max(at_zero, at_inf) > grid_max + kTie) {
    report.p_phi = std::max(at_zero, at_inf);
    report.sup_is_limit = true;
    report.arg_sup = at_inf >= at_zero ? kInf : 0.0;
  }
  report.q_phi = grid_min;
  if (std::min(at_zero, at_inf) < grid_min - kTie) {
    report.q_phi = std::min(at_zero, at_inf);
    report.inf_is_limit = true;
    report.arg_inf = at_inf <= at_zero ? kInf : 0.0;
  }

  report.delta2 = check_delta2(phi, cfg);
  report.delta2.satisfied = report.delta2.satisfied &&
                            report.p_phi < kExponentDivergence;
  if (report.q_phi > 1.0 + 1e-9) {
    report.lambda = check_lambda(phi, cfg, report.q_phi, 1e-6);
  } else {
    report.lambda.exponent = report.q_phi;
    report.lambda.satisfied = false;
    report.lambda.worst_ratio = kInf;
  }
  return report;
}

SqueezingConstants check_squeezing(const YoungFunction& phi,
                                   const ExponentReport& report, double r1,
                                   double r2) {
  require_finite(phi);
  const GridConfig& cfg = report.grid;
  if (!(r1 >= cfg.t_min && r1 <= cfg.t_max && r2 >= cfg.t_min &&
        r2 <= cfg.t_max)) {
    throw PreconditionError("squeezing radii must lie inside the grid");
  }
  const double p = report.p_phi;
  const double q = report.q_phi;
  if (!std::isfinite(p) || !std::isfinite(q)) {
    throw SqueezingViolationError("infinite exponent: t^p bound is unbounded");
  }
  auto ts = grid_with_breakpoints(phi, cfg);
  ts.push_back(r1);
  ts.push_back(r2);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  struct Extremum {
    double best;
    double at_far_end;
    double at_radius;
  };
  // Scans log(Phi / t^e) over the selected range, returning the extremum,
  // the value at the far grid end and at the radius.
  auto scan = [&](double e, bool small_range, bool take_min) {
    Extremum ex{take_min ? kInf : -kInf, 0.0, 0.0};
    for (double t : ts) {
      if (small_range ? t > r1 : t < r2) continue;
      const double v = checked_log_value(phi, t) - e * std::log(t);
      ex.best = take_min ? std::min(ex.best, v) : std::max(ex.best, v);
    }
    const double far = small_range ? ts.front() : ts.back();
    const double radius = small_range ? r1 : r2;
    ex.at_far_end = checked_log_value(phi, far) - e * std::log(far);
    ex.at_radius = checked_log_value(phi, radius) - e * std::log(radius);
    return ex;
  };
  auto resolve = [](const Extremum& ex, bool take_min) {
    // Phi(t)/t^e is monotone between the radius and the far end when the
    // exponents are consistent, so the far end must not beat the radius.
    const double drift =
        take_min ? ex.at_radius - ex.at_far_end : ex.at_far_end - ex.at_radius;
    if (drift > 1e-6) {
      throw SqueezingViolationError(
          "squeezing constant drifts toward the grid end: exponents are "
          "inconsistent with Phi");
    }
    const double c = std::exp(ex.best);
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw SqueezingViolationError("squeezing constant is not finite");
    }
    return c;
  };

  SqueezingConstants out;
  out.c_low_small = resolve(scan(p, true, true), true);
  out.c_up_small = resolve(scan(q, true, false), false);
  out.c_low_large = resolve(scan(q, false, true), true);
  out.c_up_large = resolve(scan(p, false, false), false);
  return out;
}

EquivalenceResult check_equivalence(const YoungFunction& phi1,
                                    const YoungFunction& phi2,
                                    const GridConfig& cfg) {
  require_finite(phi1);
  require_finite(phi2);
  const auto ts = cfg.points();
  std::vector<double> lr(ts.size());
  double hi = -kInf;
  double lo = kInf;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    lr[i] = checked_log_value(phi1, ts[i]) - checked_log_value(phi2, ts[i]);
    hi = std::max(hi, lr[i]);
    lo = std::min(lo, lr[i]);
  }
  EquivalenceResult out;
  out.constant = std::exp(std::max(hi, -lo));
  out.low_decade_slope = decade_slope(ts, lr, cfg.t_min, cfg.t_min * 10.0);
  out.top_decade_slope = decade_slope(ts, lr, cfg.t_max / 10.0, cfg.t_max);
  out.equivalent = std::isfinite(out.constant) &&
                   std::abs(out.low_decade_slope) < 0.01 &&
                   std::abs(out.top_decade_slope) < 0.01;
  return out;
}

YoungFunction smooth_equivalent(const YoungFunction& phi, int mollifier_nodes) {
  require_finite(phi);
  if (!check_delta2(phi).satisfied) {
    throw PreconditionError("smooth equivalent requires the Delta_2 condition");
  }
  return YoungFunction::mollified(phi, mollifier_nodes);
}

YoungFunction strictly_convex_equivalent(const YoungFunction& phi,
                                         int quad_nodes) {
  require_finite(phi);
  const ExponentReport report = compute_exponents(phi);
  if (report.q_phi <= 1.0 + 1e-3) {
    throw PreconditionError(
        "strictly convex equivalent requires q_Phi > 1");
  }
  return YoungFunction::exp_convolved(phi, quad_nodes);
}

double mollifier_first_moment(int nodes) {
  double total = 0.0;
  double moment = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double s = (i + 0.5) / nodes;
    const double u = 2.0 * s - 1.0;
    const double w = std::exp(-1.0 / (1.0 - u * u));
    total += w;
    moment += w * s;
  }
  return moment / total;
}

double min_second_difference(const YoungFunction& phi, double a, double b,
                             std::size_t n_points) {
  if (!(b > a) || n_points < 3) {
    throw PreconditionError("second differences need a < b and 3 points");
  }
  const double h = (b - a) / static_cast<double>(n_points - 1);
  double prev = phi(a);
  double cur = phi(a + h);
  double worst = kInf;
  for (std::size_t i = 2; i < n_points; ++i) {
    const double next = phi(a + h * static_cast<double>(i));
    worst = std::min(worst, prev - 2.0 * cur + next);
    prev = cur;
    cur = next;
  }
  return worst;
}

StructureReport check_structure(const YoungFunction& phi, const GridConfig& cfg,
                                std::size_t random_pairs, std::uint64_t seed) {
  StructureReport out;
  out.value_at_zero = phi(0.0);
  const double rel = phi.quadrature_defined() ? 1e-6 : 1e-9;
  const auto ts = grid_with_breakpoints(phi, cfg);

  double prev_value = 0.0;
  double prev_right = phi.derivative(0.0, Side::right);
  for (double t : ts) {
    const double v = phi(t);
    if (v < prev_value * (1.0 - 1e-14)) ++out.monotonicity_violations;
    prev_value = v;
    const double dl = phi.derivative(t, Side::left);
    const double dr = phi.derivative(t, Side::right);
    const double scale = std::max({std::abs(dl), std::abs(dr), 1e-300});
    if (dl > dr + rel * scale) ++out.derivative_order_violations;
    if (prev_right > dl + rel * std::max(scale, std::abs(prev_right))) {
      ++out.derivative_order_violations;
    }
    prev_right = dr;
  }

  std::mt19937_64 rng(seed);
  const double span = std::log(cfg.t_max / cfg.t_min);
  for (std::size_t k = 0; k < random_pairs; ++k) {
    const double s = cfg.t_min * std::exp(span * uniform01(rng));
    const double t = cfg.t_min * std::exp(span * uniform01(rng));
    const double mid = phi(0.5 * (s + t));
    const double chord = 0.5 * (phi(s) + phi(t));
    if (mid > chord * (1.0 + rel) + 1e-300) ++out.convexity_violations;
  }
  return out;
}

}  // namespace orlicz
