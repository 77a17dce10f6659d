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
#include "orlicz/operators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "orlicz/errors.hpp"
#include "orlicz/fft.hpp"
#include "orlicz/parallel.hpp"

namespace orlicz {
namespace {

cplx checked(const SymbolDescriptor& a, std::span<const double> x,
             std::span<const double> xi) {
  const cplx v = a(x, xi);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw SymbolEvaluationError("symbol '" + a.name +
                                "' is not finite at a grid frequency");
  }
  return v;
}

std::array<double, 2> frequency(std::size_t slot, int dim, std::size_t n,
                                double extent) {
  if (dim == 1) return {grid_frequency(slot, n, extent), 0.0};
  return {grid_frequency(slot / n, n, extent), grid_frequency(slot % n, n, extent)};
}

std::size_t twiddle_index(std::size_t i, std::size_t k, int dim, std::size_t n) {
  if (dim == 1) return (i * k) % n;
  return ((i / n) * (k / n) + (i % n) * (k % n)) % n;
}

void require_dims(const SymbolDescriptor& a, const GridFunction& f) {
  if (a.dim != f.dim()) {
    throw PreconditionError("symbol dimension " + std::to_string(a.dim) +
                            " does not match grid dimension " +
                            std::to_string(f.dim()));
  }
}

}  // namespace

QuantizationMatrix QuantizationMatrix::scalar(int dim, double s) {
  QuantizationMatrix m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.entries[i * dim + i] = s;
  return m;
}

double QuantizationMatrix::determinant() const {
  if (dim == 1) return entries[0];
  return entries[0] * entries[3] - entries[1] * entries[2];
}

GridFunction apply_multiplier(const SymbolDescriptor& a, const GridFunction& f,
                              MultiplierInfo* info) {
  require_dims(a, f);
  if (a.arity != Arity::xi_only) {
    throw PreconditionError("apply_multiplier needs a symbol of xi only");
  }
  const int dim = f.dim();
  const auto d = static_cast<std::size_t>(dim);
  GridFunction out = f;
  auto values = out.mutable_values();
  std::vector<std::size_t> shape(d, f.n());
  dft(values, shape, FftDirection::forward);
  const double scale = 1.0 / static_cast<double>(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto xi = frequency(k, dim, f.n(), f.extent());
    values[k] *= checked(a, {}, std::span<const double>(xi.data(), d)) * scale;
  }
  if (info != nullptr) info->origin_zeroed = a.singular_at_origin;
  dft(values, shape, FftDirection::backward);
  return out;
}

GridFunction apply_psdo_kn(const SymbolDescriptor& a, const GridFunction& f) {
  require_dims(a, f);
  const int dim = f.dim();
  const auto d = static_cast<std::size_t>(dim);
  const std::size_t n = f.n();
  std::vector<cplx> spectrum(f.values().begin(), f.values().end());
  std::vector<std::size_t> shape(d, n);
  dft(spectrum, shape, FftDirection::forward);
  const auto roots = unit_roots(n);
  const std::size_t size = f.size();

  std::vector<std::array<double, 2>> xis(size);
  for (std::size_t k = 0; k < size; ++k) xis[k] = frequency(k, dim, n, f.extent());

  std::vector<cplx> fixed;
  if (a.arity == Arity::xi_only) {
    fixed.resize(size);
    for (std::size_t k = 0; k < size; ++k) {
      fixed[k] = checked(a, {}, std::span<const double>(xis[k].data(), d));
    }
  }

  GridFunction out = GridFunction::zeros(dim, f.extent(), n);
  auto result = out.mutable_values();
  const double scale = 1.0 / static_cast<double>(size);
  parallel_for(size, [&](std::size_t i) {
    std::array<double, 2> x{};
    f.point(i, x);
    std::span<const double> xs(x.data(), d);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < size; ++k) {
      const cplx symbol = fixed.empty()
                              ? checked(a, xs, std::span<const double>(xis[k].data(), d))
                              : fixed[k];
      acc += symbol * spectrum[k] * roots[twiddle_index(i, k, dim, n)];
    }
    result[i] = acc * scale;
  });
  return out;
}

GridFunction apply_psdo_general(const SymbolDescriptor& a,
                                const QuantizationMatrix& A,
                                const GridFunction& f) {
  require_dims(a, f);
  if (f.dim() != 1 || A.dim != 1) {
    throw PreconditionError("apply_psdo_general supports d = 1 only");
  }
  const std::size_t n = f.n();
  if (n > kPsdoGeneralMaxN) {
    throw ResourceError("apply_psdo_general is limited to n <= " +
                        std::to_string(kPsdoGeneralMaxN));
  }
  const double s = A.entries[0];
  const auto roots = unit_roots(n);
  std::vector<double> xs(n), xis(n);
  for (std::size_t j = 0; j < n; ++j) {
    xs[j] = f.coordinate(j);
    xis[j] = grid_frequency(j, n, f.extent());
  }
  std::vector<cplx> fixed;
  if (a.arity == Arity::xi_only) {
    fixed.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      fixed[k] = checked(a, {}, std::span<const double>(&xis[k], 1));
    }
  }
  GridFunction out = GridFunction::zeros(1, f.extent(), n);
  auto result = out.mutable_values();
  parallel_for(n, [&](std::size_t i) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      cplx inner = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double pos = (1.0 - s) * xs[i] + s * xs[j];
        const cplx symbol =
            fixed.empty() ? checked(a, std::span<const double>(&pos, 1),
                                    std::span<const double>(&xis[k], 1))
                          : fixed[k];
        inner += symbol * f[j] * roots[((i + n - j) % n) * k % n];
      }
      acc += inner;
    }
    result[i] = acc / static_cast<double>(n);
  });
  return out;
}

GridFunction apply_fio(const SymbolDescriptor& a, const ValidatedPhase& phase,
                       const GridFunction& f) {
  require_dims(a, f);
  if (f.dim() != 1 || phase.phase().dim != 1) {
    throw PreconditionError("apply_fio supports d = 1 only");
  }
  if (!a.support_cutoff || !(*a.support_cutoff > 0.0)) {
    throw PreconditionError("apply_fio needs a symbol with a support cutoff eps > 0");
  }
  const std::size_t n = f.n();
  if (n > kFioMaxN) {
    throw ResourceError("apply_fio is limited to n <= " + std::to_string(kFioMaxN));
  }
  const double eps = *a.support_cutoff;
  const auto spectrum = fourier_transform(f);
  std::vector<std::size_t> band;
  std::vector<double> xis;
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = grid_frequency(k, n, f.extent());
    if (std::abs(xi) >= eps) {
      band.push_back(k);
      xis.push_back(xi);
    }
  }
  const double weight = (std::numbers::pi / f.extent()) / (2.0 * std::numbers::pi);
  const PhaseDescriptor& ph = phase.phase();
  GridFunction out = GridFunction::zeros(1, f.extent(), n);
  auto result = out.mutable_values();
  parallel_for(n, [&](std::size_t i) {
    const double x = f.coordinate(i);
    std::span<const double> xs(&x, 1);
    cplx acc = 0.0;
    for (std::size_t b = 0; b < band.size(); ++b) {
      std::span<const double> ks(&xis[b], 1);
      const cplx symbol = checked(a, xs, ks);
      acc += std::polar(1.0, ph.value(xs, ks)) * symbol * spectrum[band[b]];
    }
    result[i] = acc * weight;
  });
  return out;
}

}  // namespace orlicz
