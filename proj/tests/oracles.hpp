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

// Independent reference computations for the unit and acceptance tests.
// None of these route through FFTW or the library's own quadrature.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace orlicz::testing {

using cplx = std::complex<double>;

/// O(n^2) DFT with sign -1 (forward) or +1 (backward), unnormalized.
inline std::vector<cplx> naive_dft(const std::vector<cplx>& in, int sign) {
  const std::size_t n = in.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) /
                           static_cast<double>(n);
      acc += in[j] * cplx(std::cos(angle), std::sin(angle));
    }
    out[k] = acc;
  }
  return out;
}

/// Adaptive Gauss-Kronrod integral of a smooth real function on [a, b].
template <class F>
double gk_integrate(F&& f, double a, double b, double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol);
}

/// Periodic conjugate function (Hilbert transform on the circle [-L, L)):
/// (1/2L) PV int g(y) cot(pi (x - y) / 2L) dy, with the singularity removed
/// by subtracting g(x) (the cot kernel has zero mean).
template <class G>
double periodic_hilbert(G&& g, double x, double extent) {
  const double gx = g(x);
  auto integrand = [&](double y) {
    const double u = std::numbers::pi * (x - y) / (2.0 * extent);
    if (std::abs(u) < 1e-15) return 0.0;
    return (g(y) - gx) / std::tan(u);
  };
  // The integrand is smooth across y = x; split there and at the antipode.
  const double lo = -extent, hi = extent;
  double acc = 0.0;
  std::vector<double> cuts{lo, x, hi};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) acc += gk_integrate(integrand, cuts[i], cuts[i + 1]);
  }
  return acc / (2.0 * extent);
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace orlicz::testing
