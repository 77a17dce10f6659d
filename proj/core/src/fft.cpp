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
#include "orlicz/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

// The FFTW planner is not thread safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

double sign_factor(std::size_t idx, int dim, std::size_t n) {
  long sum = 0;
  if (dim == 1) {
    sum = signed_index(idx, n);
  } else {
    sum = signed_index(idx / n, n) + signed_index(idx % n, n);
  }
  return (sum % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

void dft(std::span<cplx> data, std::span<const std::size_t> shape,
         FftDirection direction) {
  if (shape.empty()) throw PreconditionError("dft needs a non-empty shape");
  std::vector<int> dims;
  std::size_t total = 1;
  for (std::size_t s : shape) {
    dims.push_back(static_cast<int>(s));
    total *= s;
  }
  if (total != data.size()) {
    throw PreconditionError("dft shape does not match the data size");
  }
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  const int sign = direction == FftDirection::forward ? FFTW_FORWARD
                                                     : FFTW_BACKWARD;
  fftw_plan plan = nullptr;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), ptr, ptr,
                         sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw ResourceError("FFTW could not create a plan");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

double grid_frequency(std::size_t k, std::size_t n, double extent) {
  return std::numbers::pi * static_cast<double>(signed_index(k, n)) / extent;
}

std::vector<cplx> unit_roots(std::size_t n) {
  std::vector<cplx> w(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) /
                         static_cast<double>(n);
    w[m] = cplx(std::cos(angle), std::sin(angle));
  }
  return w;
}

std::vector<cplx> fourier_transform(const GridFunction& f) {
  std::vector<cplx> out(f.values().begin(), f.values().end());
  std::vector<std::size_t> shape(static_cast<std::size_t>(f.dim()), f.n());
  dft(out, shape, FftDirection::forward);
  const double vol = f.cell_volume();
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] *= vol * sign_factor(k, f.dim(), f.n());
  }
  return out;
}

GridFunction inverse_fourier_transform(std::span<const cplx> spectrum, int dim,
                                       double extent, std::size_t n) {
  GridFunction g = GridFunction::zeros(dim, extent, n);
  if (spectrum.size() != g.size()) {
    throw PreconditionError("spectrum size does not match the grid");
  }
  auto values = g.mutable_values();
  const double inv_vol = 1.0 / g.cell_volume();
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = spectrum[k] * sign_factor(k, dim, n) * inv_vol;
  }
  std::vector<std::size_t> shape(static_cast<std::size_t>(dim), n);
  dft(values, shape, FftDirection::backward);
  const double scale = 1.0 / static_cast<double>(g.size());
  for (cplx& v : values) v *= scale;
  return g;
}

}  // namespace orlicz
