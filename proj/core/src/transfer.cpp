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
#include <cmath>
#include <numbers>

#include "orlicz/errors.hpp"
#include "orlicz/fft.hpp"
#include "orlicz/operators.hpp"

namespace orlicz {
namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Lattice index along one x axis, periodic in [-L, L).
std::size_t x_index(double x, const SampledSymbol& s) {
  const double h = s.x_spacing();
  const double period = 2.0 * s.extent;
  double u = std::fmod(x + s.extent, period);
  if (u < 0.0) u += period;
  const double pos = u / h;
  const double r = std::round(pos);
  if (std::abs(pos - r) > 1e-6) {
    throw SymbolEvaluationError("x = " + std::to_string(x) +
                                " is not a lattice point of the sampled symbol");
  }
  return static_cast<std::size_t>(r) % s.nx;
}

std::size_t xi_index(double xi, const SampledSymbol& s) {
  const double pos = xi / s.dxi;
  const double r = std::round(pos);
  const double half = static_cast<double>(s.nxi / 2);
  if (std::abs(pos - r) > 1e-6 || r < -half || r >= half) {
    throw SymbolEvaluationError("xi = " + std::to_string(xi) +
                                " is not a lattice frequency of the sampled symbol");
  }
  return static_cast<std::size_t>(r + half);
}

}  // namespace

std::size_t SampledSymbol::size() const {
  return ipow(nx, dim) * ipow(nxi, dim);
}

cplx SampledSymbol::at(std::span<const double> x,
                       std::span<const double> xi) const {
  std::size_t idx = 0;
  for (int a = 0; a < dim; ++a) idx = idx * nx + x_index(x[a], *this);
  for (int a = 0; a < dim; ++a) idx = idx * nxi + xi_index(xi[a], *this);
  return values[idx];
}

SampledSymbol sample_symbol(const SymbolDescriptor& a, int dim, double extent,
                            std::size_t n, std::size_t x_refine) {
  if (a.dim != dim) throw PreconditionError("symbol dimension mismatch");
  if (x_refine == 0) throw PreconditionError("x_refine must be positive");
  SampledSymbol s;
  s.dim = dim;
  s.extent = extent;
  s.nx = n * x_refine;
  s.nxi = n;
  s.dxi = std::numbers::pi / extent;
  s.values.resize(s.size());
  const auto d = static_cast<std::size_t>(dim);
  const std::size_t x_count = ipow(s.nx, dim);
  const std::size_t xi_count = ipow(s.nxi, dim);
  std::array<double, 2> x{}, xi{};
  for (std::size_t ix = 0; ix < x_count; ++ix) {
    std::size_t rest = ix;
    for (int b = dim - 1; b >= 0; --b) {
      x[b] = -extent + s.x_spacing() * static_cast<double>(rest % s.nx);
      rest /= s.nx;
    }
    for (std::size_t ik = 0; ik < xi_count; ++ik) {
      std::size_t r2 = ik;
      for (int b = dim - 1; b >= 0; --b) {
        const double m = static_cast<double>(r2 % s.nxi) -
                         static_cast<double>(s.nxi / 2);
        xi[b] = m * s.dxi;
        r2 /= s.nxi;
      }
      s.values[ix * xi_count + ik] = a(std::span<const double>(x.data(), d),
                                       std::span<const double>(xi.data(), d));
    }
  }
  return s;
}

SymbolDescriptor as_descriptor(const SampledSymbol& s, std::string name) {
  SymbolDescriptor a;
  a.name = std::move(name);
  a.dim = s.dim;
  a.arity = Arity::x_and_xi;
  a.fd_fallback = false;
  a.value = [s](std::span<const double> x, std::span<const double> xi) {
    return s.at(x, xi);
  };
  return a;
}

SampledSymbol transfer_quantization(const SampledSymbol& a1,
                                    const QuantizationMatrix& A1,
                                    const QuantizationMatrix& A2) {
  if (A1.dim != a1.dim || A2.dim != a1.dim) {
    throw PreconditionError("quantization matrices must match the symbol dimension");
  }
  if (a1.values.size() != a1.size()) {
    throw PreconditionError("sampled symbol has the wrong number of values");
  }
  SampledSymbol out = a1;
  if (A1 == A2) return out;
  const int dim = a1.dim;
  std::vector<std::size_t> shape;
  for (int b = 0; b < dim; ++b) shape.push_back(a1.nx);
  for (int b = 0; b < dim; ++b) shape.push_back(a1.nxi);
  dft(out.values, shape, FftDirection::forward);

  const double eta_unit = 2.0 * std::numbers::pi / (2.0 * a1.extent);
  const double y_unit =
      2.0 * std::numbers::pi / (static_cast<double>(a1.nxi) * a1.dxi);
  const std::size_t xi_count = ipow(a1.nxi, dim);
  const double scale = 1.0 / static_cast<double>(out.values.size());
  std::array<double, 2> eta{}, y{};
  for (std::size_t slot = 0; slot < out.values.size(); ++slot) {
    std::size_t rx = slot / xi_count;
    std::size_t rk = slot % xi_count;
    for (int b = dim - 1; b >= 0; --b) {
      eta[b] = eta_unit * static_cast<double>(signed_index(rx % a1.nx, a1.nx));
      rx /= a1.nx;
      y[b] = y_unit * static_cast<double>(signed_index(rk % a1.nxi, a1.nxi));
      rk /= a1.nxi;
    }
    double phase = 0.0;
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        phase += (A1.at(r, c) - A2.at(r, c)) * y[c] * eta[r];
      }
    }
    out.values[slot] *= std::polar(scale, phase);
  }
  dft(out.values, shape, FftDirection::backward);
  return out;
}

}  // namespace orlicz
