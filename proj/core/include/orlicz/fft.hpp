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
#include <span>
#include <vector>

#include "orlicz/grid_function.hpp"

namespace orlicz {

enum class FftDirection { forward, backward };

/// Unnormalized in-place DFT over a row-major array of the given shape.
/// Forward uses exp(-2 pi i j k / n), backward exp(+2 pi i j k / n).
void dft(std::span<cplx> data, std::span<const std::size_t> shape,
         FftDirection direction);

/// Signed lattice index in [-n/2, n/2) for the DFT slot k.
inline long signed_index(std::size_t k, std::size_t n) {
  const long kk = static_cast<long>(k);
  const long nn = static_cast<long>(n);
  return kk < nn / 2 ? kk : kk - nn;
}

/// Angular frequency of DFT slot k on a grid of extent L: pi k~ / L.
double grid_frequency(std::size_t k, std::size_t n, double extent);

/// exp(2 pi i m / n) for m = 0..n-1.
std::vector<cplx> unit_roots(std::size_t n);

/// f^(xi_k) = int f(x) exp(-i x xi_k) dx approximated on the grid, stored in
/// DFT slot order.
std::vector<cplx> fourier_transform(const GridFunction& f);

/// Inverse of fourier_transform: (2 pi)^{-d} sum_k g_k exp(i x xi_k) dxi^d.
GridFunction inverse_fourier_transform(std::span<const cplx> spectrum, int dim,
                                       double extent, std::size_t n);

}  // namespace orlicz
