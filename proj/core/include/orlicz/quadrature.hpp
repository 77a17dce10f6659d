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
#include <vector>

namespace orlicz {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Computes the n-point rule by Newton iteration on P_n. Results are cached
/// per n and the returned reference stays valid for the program lifetime.
const GaussLegendreRule& gauss_legendre(std::size_t n);

/// Composite Gauss-Legendre integral of f over [a, b] with `panels` equal
/// panels of `n` nodes each.
template <class F>
double integrate_composite(F&& f, double a, double b, std::size_t panels,
                           std::size_t n) {
  const auto& rule = gauss_legendre(n);
  const double width = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    }
    total += 0.5 * width * panel;
  }
  return total;
}

/// Least-squares slope of ys against xs.
double least_squares_slope(const std::vector<double>& xs,
                           const std::vector<double>& ys);

}  // namespace orlicz
