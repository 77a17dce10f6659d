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
#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

std::vector<double> magnitudes(const GridFunction& f) {
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  return out;
}

// Distinct positive levels in decreasing order with the measure of
// {|f| >= level}.
struct Levels {
  std::vector<double> value;
  std::vector<double> measure;
};

Levels level_sets(const GridFunction& f) {
  auto mags = magnitudes(f);
  std::sort(mags.begin(), mags.end(), std::greater<>());
  Levels out;
  const double vol = f.cell_volume();
  for (std::size_t i = 0; i < mags.size() && mags[i] > 0.0;) {
    std::size_t j = i;
    while (j < mags.size() && mags[j] == mags[i]) ++j;
    out.value.push_back(mags[i]);
    out.measure.push_back(static_cast<double>(j) * vol);
    i = j;
  }
  return out;
}

void require_norm_phi(const YoungFunction& phi) {
  if (!phi.finite_everywhere()) {
    throw PreconditionError("Orlicz norms need a finite-valued Young function");
  }
}

// Bracket from Phi(t_big) cellvol >= 1 >= Phi(t_small) (2L)^d.
std::pair<double, double> initial_bracket(const GridFunction& f,
                                          const YoungFunction& phi,
                                          double sup_norm) {
  const double t_small = inverse(phi, 1.0 / f.domain_volume());
  const double t_big = inverse(phi, 1.0 / f.cell_volume());
  if (!(t_small > 0.0) || !(t_big > 0.0)) {
    throw DegenerateFunctionError("Phi vanishes near the origin");
  }
  return {sup_norm / t_big, sup_norm / t_small};
}

}  // namespace

double distribution_function(const GridFunction& f, double t) {
  if (!(t >= 0.0)) throw DomainError("distribution function needs t >= 0");
  std::size_t count = 0;
  for (const cplx& v : f.values()) {
    if (std::abs(v) > t) ++count;
  }
  return static_cast<double>(count) * f.cell_volume();
}

double lp_norm(const GridFunction& f, double p) {
  if (!(p > 0.0)) throw PreconditionError("L^p norm needs p > 0");
  const auto mags = magnitudes(f);
  const double top = *std::max_element(mags.begin(), mags.end());
  if (std::isinf(p) || top == 0.0) return top;
  double sum = 0.0;
  for (double m : mags) sum += std::pow(m / top, p);
  return top * std::pow(sum * f.cell_volume(), 1.0 / p);
}

double weak_lp_norm(const GridFunction& f, double p) {
  if (!(p > 0.0)) throw PreconditionError("weak L^p norm needs p > 0");
  const Levels levels = level_sets(f);
  double best = 0.0;
  for (std::size_t k = 0; k < levels.value.size(); ++k) {
    const double w = std::isinf(p) ? 1.0 : std::pow(levels.measure[k], 1.0 / p);
    best = std::max(best, levels.value[k] * w);
  }
  return best;
}

double luxemburg_modular(const GridFunction& f, const YoungFunction& phi,
                         double lambda) {
  double sum = 0.0;
  for (const cplx& v : f.values()) {
    const double m = std::abs(v);
    if (m > 0.0) sum += phi(m / lambda);
  }
  return sum * f.cell_volume();
}

double weak_orlicz_functional(const GridFunction& f, const YoungFunction& phi,
                              double lambda) {
  const Levels levels = level_sets(f);
  double best = 0.0;
  for (std::size_t k = 0; k < levels.value.size(); ++k) {
    best = std::max(best, phi(levels.value[k] / lambda) * levels.measure[k]);
  }
  return best;
}

NormResult bisect_scale(const std::function<double(double)>& functional,
                        double lo, double hi, double rel_tol) {
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw PreconditionError("scale bracket must satisfy 0 < lo <= hi");
  }
  int guard = 0;
  while (functional(lo) <= 1.0) {
    lo *= 0.5;
    if (++guard > 60) {
      throw DivergenceError("functional stays below 1 at every scale");
    }
  }
  guard = 0;
  while (!(functional(hi) <= 1.0)) {
    hi *= 2.0;
    if (++guard > 60) {
      throw DivergenceError(
          "modular never drops to 1: function is not in the space at this "
          "discretization");
    }
  }
  hi = std::max(hi, lo);
  NormResult out;
  out.tolerance = rel_tol;
  while (hi - lo > rel_tol * hi) {
    const double mid = hi > 4.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (functional(mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++out.bisection_iters;
  }
  out.value = hi;
  out.modular_at_value = functional(hi);
  return out;
}

NormResult luxemburg_norm(const GridFunction& f, const YoungFunction& phi,
                          double rel_tol) {
  require_norm_phi(phi);
  const double top = lp_norm(f, std::numeric_limits<double>::infinity());
  if (top == 0.0) return NormResult{0.0, 0.0, 0, rel_tol};
  const auto mags = magnitudes(f);
  const double vol = f.cell_volume();
  auto modular = [&](double lambda) {
    double sum = 0.0;
    for (double m : mags) {
      if (m > 0.0) sum += phi(m / lambda);
    }
    return sum * vol;
  };
  const auto [lo, hi] = initial_bracket(f, phi, top);
  return bisect_scale(modular, lo, hi, rel_tol);
}

NormResult weak_orlicz_norm(const GridFunction& f, const YoungFunction& phi,
                            double rel_tol) {
  require_norm_phi(phi);
  const Levels levels = level_sets(f);
  if (levels.value.empty()) return NormResult{0.0, 0.0, 0, rel_tol};
  auto functional = [&](double lambda) {
    double best = 0.0;
    for (std::size_t k = 0; k < levels.value.size(); ++k) {
      best = std::max(best, phi(levels.value[k] / lambda) * levels.measure[k]);
    }
    return best;
  };
  const auto [lo, hi] = initial_bracket(f, phi, levels.value.front());
  return bisect_scale(functional, lo, hi, rel_tol);
}

}  // namespace orlicz
