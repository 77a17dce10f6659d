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
#include "orlicz/symbol_conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "orlicz/errors.hpp"
#include "orlicz/parallel.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {
namespace {

using Point = std::array<double, 2>;

// Probe points grouped by radius: groups[0] is the origin when requested.
std::vector<std::vector<Point>> radial_groups(int dim,
                                              const std::vector<double>& radii,
                                              std::size_t directions,
                                              bool include_origin) {
  std::vector<std::vector<Point>> groups;
  if (include_origin) groups.push_back({Point{0.0, 0.0}});
  for (double r : radii) {
    std::vector<Point> g;
    if (dim == 1) {
      g.push_back({r, 0.0});
      g.push_back({-r, 0.0});
    } else {
      for (std::size_t j = 0; j < directions; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                             static_cast<double>(directions);
        g.push_back({r * std::cos(theta), r * std::sin(theta)});
      }
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

std::vector<std::array<int, 2>> indices_up_to(int dim, int order) {
  std::vector<std::array<int, 2>> out;
  for (int k = 0; k <= order; ++k) {
    for (const auto& idx : indices_of_order(dim, k)) out.push_back(idx);
  }
  return out;
}

int total(const std::array<int, 2>& idx) { return idx[0] + idx[1]; }

double top_decade_slope(const std::vector<double>& radii,
                        const std::vector<double>& envelope) {
  const double top = radii.back();
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] >= top / 10.0 * (1.0 - 1e-12) && radii[i] > 0.0) {
      xs.push_back(std::log(radii[i]));
      ys.push_back(std::log(std::max(envelope[i], 1e-300)));
    }
  }
  if (xs.size() < 2) return 0.0;
  return least_squares_slope(xs, ys);
}

using WeightFn = std::function<double(const std::array<int, 2>& x_idx,
                                      const std::array<int, 2>& xi_idx,
                                      std::span<const double> x,
                                      std::span<const double> xi)>;

SeminormResult weighted_scan(const SymbolDescriptor& a, int order,
                             const GridConfig& probe, const WeightFn& weight) {
  if (order < 0) throw PreconditionError("seminorm order must be >= 0");
  const int dim = a.dim;
  const auto d = static_cast<std::size_t>(dim);
  const std::vector<double> radii = probe.points();
  const bool x_dependent = a.arity == Arity::x_and_xi;
  const bool skip_xi_origin = a.singular_at_origin;

  std::vector<double> x_radii{0.0};
  auto x_groups = radial_groups(dim, x_dependent ? radii : std::vector<double>{},
                                8, true);
  if (x_dependent) x_radii.insert(x_radii.end(), radii.begin(), radii.end());
  std::vector<double> xi_radii;
  if (!skip_xi_origin) xi_radii.push_back(0.0);
  xi_radii.insert(xi_radii.end(), radii.begin(), radii.end());
  const auto xi_groups = radial_groups(dim, radii, 8, !skip_xi_origin);

  const auto idx = indices_up_to(dim, order);
  std::vector<std::vector<double>> table(x_groups.size(),
                                         std::vector<double>(xi_groups.size()));
  parallel_for(x_groups.size(), [&](std::size_t ix) {
    for (std::size_t ik = 0; ik < xi_groups.size(); ++ik) {
      double best = 0.0;
      for (const Point& x : x_groups[ix]) {
        for (const Point& xi : xi_groups[ik]) {
          std::span<const double> xs(x.data(), d);
          std::span<const double> ks(xi.data(), d);
          double sum = 0.0;
          for (const auto& bx : idx) {
            if (!x_dependent && total(bx) > 0) continue;
            for (const auto& ak : idx) {
              MultiIndex alpha;
              alpha.x = bx;
              alpha.xi = ak;
              sum += weight(bx, ak, xs, ks) *
                     std::abs(a.derivative_at(alpha, xs, ks));
            }
          }
          best = std::max(best, sum);
        }
      }
      table[ix][ik] = best;
    }
  });

  SeminormResult out;
  for (const auto& g : x_groups) out.probe_count += g.size();
  std::size_t xi_count = 0;
  for (const auto& g : xi_groups) xi_count += g.size();
  out.probe_count *= xi_count;

  std::vector<double> env_xi(xi_groups.size(), 0.0);
  std::vector<double> env_x(x_groups.size(), 0.0);
  for (std::size_t ix = 0; ix < x_groups.size(); ++ix) {
    for (std::size_t ik = 0; ik < xi_groups.size(); ++ik) {
      env_xi[ik] = std::max(env_xi[ik], table[ix][ik]);
      env_x[ix] = std::max(env_x[ix], table[ix][ik]);
      out.value = std::max(out.value, table[ix][ik]);
    }
  }
  for (std::size_t i = 1; i < env_xi.size(); ++i) {
    env_xi[i] = std::max(env_xi[i], env_xi[i - 1]);
  }
  for (std::size_t i = 1; i < env_x.size(); ++i) {
    env_x[i] = std::max(env_x[i], env_x[i - 1]);
  }
  out.xi_slope = top_decade_slope(xi_radii, env_xi);
  out.x_slope = x_dependent ? top_decade_slope(x_radii, env_x) : 0.0;
  out.finite = std::isfinite(out.value) && out.xi_slope < 0.01 &&
               out.x_slope < 0.01;
  return out;
}

}  // namespace

GridConfig default_radial_probe() {
  return GridConfig{1e-2, 1e3, 400, Spacing::log};
}

GridConfig default_phase_space_probe() {
  return GridConfig{1e-2, 1e3, 41, Spacing::log};
}

MihlinResult mihlin_functional(const SymbolDescriptor& a, int dim,
                               const GridConfig& probe) {
  if (dim != a.dim) throw PreconditionError("symbol dimension mismatch");
  const auto d = static_cast<std::size_t>(dim);
  const int max_order = dim / 2 + 1;
  const auto groups = radial_groups(dim, probe.points(), 64, false);
  MihlinResult out;
  for (int k = 0; k <= max_order; ++k) {
    for (const auto& idx : indices_of_order(dim, k)) {
      MultiIndex alpha;
      alpha.xi = idx;
      double sup = 0.0;
      for (const auto& g : groups) {
        for (const Point& xi : g) {
          std::span<const double> ks(xi.data(), d);
          const double r = euclidean_norm(ks);
          const double v = std::pow(r, k) * std::abs(a.derivative_at(alpha, {}, ks));
          sup = std::max(sup, v);
        }
      }
      out.table.push_back({alpha, sup});
      out.max = std::max(out.max, sup);
    }
  }
  return out;
}

std::vector<double> dyadic_radii(int kmin, int kmax) {
  std::vector<double> out;
  for (int k = kmin; k <= kmax; ++k) out.push_back(std::ldexp(1.0, k));
  return out;
}

HormanderResult hormander_functional(const SymbolDescriptor& a, int dim,
                                     std::span<const double> radii) {
  if (dim != a.dim) throw PreconditionError("symbol dimension mismatch");
  std::vector<double> rs(radii.begin(), radii.end());
  if (rs.empty()) rs = dyadic_radii();
  const int max_order = dim / 2 + 1;
  std::vector<MultiIndex> alphas;
  for (int k = 0; k <= max_order; ++k) {
    for (const auto& idx : indices_of_order(dim, k)) {
      MultiIndex alpha;
      alpha.xi = idx;
      alphas.push_back(alpha);
    }
  }
  HormanderResult out;
  out.table.resize(alphas.size() * rs.size());
  parallel_for(out.table.size(), [&](std::size_t slot) {
    const MultiIndex& alpha = alphas[slot / rs.size()];
    const double R = rs[slot % rs.size()];
    const int k = alpha.xi_order();
    const double scale = std::pow(R, -dim + 2 * k);
    HormanderEntry e;
    e.alpha = alpha;
    e.radius = R;
    if (dim == 1) {
      auto integrand = [&](double t) {
        const double xi[1] = {t};
        return std::norm(a.derivative_at(alpha, {}, xi));
      };
      e.negative_side = scale * integrate_composite(integrand, -2.0 * R, -R, 100, 100);
      e.positive_side = scale * integrate_composite(integrand, R, 2.0 * R, 100, 100);
      e.value = e.negative_side + e.positive_side;
    } else {
      const auto& rule = gauss_legendre(256);
      const std::size_t n_theta = 256;
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = 1.5 * R + 0.5 * R * rule.nodes[i];
        double ring = 0.0;
        for (std::size_t j = 0; j < n_theta; ++j) {
          const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                               static_cast<double>(n_theta);
          const double xi[2] = {r * std::cos(theta), r * std::sin(theta)};
          ring += std::norm(a.derivative_at(alpha, {}, xi));
        }
        sum += 0.5 * R * rule.weights[i] * r * ring * 2.0 * std::numbers::pi /
               static_cast<double>(n_theta);
      }
      e.value = scale * sum;
    }
    out.table[slot] = e;
  });
  for (const auto& e : out.table) out.max = std::max(out.max, e.value);
  return out;
}

SeminormResult hormander_class_seminorm(const SymbolDescriptor& a, double r,
                                        double rho, double delta, int order,
                                        const GridConfig& probe) {
  if (!(0.0 <= delta && delta <= rho && rho <= 1.0 && delta < 1.0)) {
    throw PreconditionError("Hormander class needs 0 <= delta <= rho <= 1, delta < 1");
  }
  return weighted_scan(
      a, order, probe,
      [=](const std::array<int, 2>& x_idx, const std::array<int, 2>& xi_idx,
          std::span<const double>, std::span<const double> xi) {
        return std::pow(japanese_bracket(xi),
                        -r + rho * total(xi_idx) - delta * total(x_idx));
      });
}

SeminormResult sg_seminorm(const SymbolDescriptor& a, double m, double mu,
                           int order, const GridConfig& probe) {
  return weighted_scan(
      a, order, probe,
      [=](const std::array<int, 2>& x_idx, const std::array<int, 2>& xi_idx,
          std::span<const double> x, std::span<const double> xi) {
        return std::pow(japanese_bracket(x), -m + total(x_idx)) *
               std::pow(japanese_bracket(xi), -mu + total(xi_idx));
      });
}

bool PhaseReport::acceptable() const {
  auto in_band = [](double v) { return v >= 1e-2 && v <= 1e2; };
  return det_lower_bound >= 1e-6 && homogeneity_residual <= 1e-8 &&
         in_band(xi_gradient_ratio_min) && in_band(xi_gradient_ratio_max) &&
         in_band(x_gradient_ratio_min) && in_band(x_gradient_ratio_max) &&
         growth[0] <= 1e2 && growth[1] <= 1e2 && growth[2] <= 1e2;
}

PhaseReport validate_phase(const PhaseDescriptor& phase, const GridConfig& probe) {
  const int dim = phase.dim;
  const auto d = static_cast<std::size_t>(dim);
  const auto radii = probe.points();
  const auto x_groups = radial_groups(dim, radii, 8, true);
  const auto xi_groups = radial_groups(dim, radii, 8, false);

  PhaseReport rep;
  rep.det_lower_bound = std::numeric_limits<double>::infinity();
  rep.xi_gradient_ratio_min = rep.x_gradient_ratio_min =
      std::numeric_limits<double>::infinity();
  std::array<double, 2> gx{}, gxi{}, gplus{}, gminus{};
  std::array<double, 4> hess{};
  for (const auto& xg : x_groups) {
    for (const Point& xp : xg) {
      for (const auto& kg : xi_groups) {
        for (const Point& kp : kg) {
          ++rep.probe_count;
          std::span<const double> x(xp.data(), d);
          std::span<const double> xi(kp.data(), d);
          const double bx = japanese_bracket(x);
          const double nxi = euclidean_norm(xi);
          const double value = phase.value(x, xi);

          phase.mixed_hessian(x, xi, std::span<double>(hess.data(), d * d));
          const double det = dim == 1 ? hess[0] : hess[0] * hess[3] - hess[1] * hess[2];
          rep.det_lower_bound = std::min(rep.det_lower_bound, std::abs(det));

          for (double tau : {2.0, 0.5}) {
            const Point scaled{tau * kp[0], tau * kp[1]};
            const double lhs = phase.value(x, std::span<const double>(scaled.data(), d));
            const double res = std::abs(lhs - tau * value) / (tau * bx * nxi);
            rep.homogeneity_residual = std::max(rep.homogeneity_residual, res);
          }

          phase.grad_x(x, xi, std::span<double>(gx.data(), d));
          phase.grad_xi(x, xi, std::span<double>(gxi.data(), d));
          const double rxi = japanese_bracket(std::span<const double>(gxi.data(), d)) / bx;
          const double rx = japanese_bracket(std::span<const double>(gx.data(), d)) /
                            japanese_bracket(xi);
          rep.xi_gradient_ratio_min = std::min(rep.xi_gradient_ratio_min, rxi);
          rep.xi_gradient_ratio_max = std::max(rep.xi_gradient_ratio_max, rxi);
          rep.x_gradient_ratio_min = std::min(rep.x_gradient_ratio_min, rx);
          rep.x_gradient_ratio_max = std::max(rep.x_gradient_ratio_max, rx);

          rep.growth[0] = std::max(rep.growth[0], std::abs(value) / (bx * nxi));
          rep.growth[1] = std::max(
              rep.growth[1], euclidean_norm(std::span<const double>(gx.data(), d)) / nxi);
          for (std::size_t k = 0; k < d; ++k) {
            Point xp_plus = xp, xp_minus = xp;
            const double h = std::max(std::abs(xp[k]), 1.0) * 6e-6;
            xp_plus[k] += h;
            xp_minus[k] -= h;
            phase.grad_x(std::span<const double>(xp_plus.data(), d), xi,
                         std::span<double>(gplus.data(), d));
            phase.grad_x(std::span<const double>(xp_minus.data(), d), xi,
                         std::span<double>(gminus.data(), d));
            for (std::size_t j = 0; j < d; ++j) {
              const double second = (gplus[j] - gminus[j]) / (2.0 * h);
              rep.growth[2] = std::max(rep.growth[2], std::abs(second) * bx / nxi);
            }
          }
        }
      }
    }
  }
  return rep;
}

ValidatedPhase ValidatedPhase::accept(const PhaseDescriptor& phase,
                                      const GridConfig& probe) {
  PhaseReport rep = validate_phase(phase, probe);
  if (!rep.acceptable()) {
    throw PreconditionError("phase '" + phase.name +
                            "' fails the phase-function checks (det, "
                            "homogeneity or growth)");
  }
  return ValidatedPhase(phase, rep);
}

}  // namespace orlicz
