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

#include <array>
#include <cstddef>
#include <vector>

#include "orlicz/grid_function.hpp"
#include "orlicz/symbol_conditions.hpp"
#include "orlicz/symbols.hpp"

namespace orlicz {

/// Real d x d matrix (d <= 2), row-major.
struct QuantizationMatrix {
  int dim = 1;
  std::array<double, 4> entries{};

  static QuantizationMatrix scalar(int dim, double s);
  double at(int row, int col) const { return entries[row * dim + col]; }
  double determinant() const;
  bool operator==(const QuantizationMatrix&) const = default;
};

struct MultiplierInfo {
  bool origin_zeroed = false;
};

/// a(D) f on the periodic grid: inverse DFT of a(xi_k) times the DFT of f,
/// xi_k = pi k / L with k in [-n/2, n/2). a(0) is 0 for symbols singular at
/// the origin.
GridFunction apply_multiplier(const SymbolDescriptor& a, const GridFunction& f,
                              MultiplierInfo* info = nullptr);

/// Kohn-Nirenberg quantization by direct summation over the frequency
/// lattice, d <= 2.
GridFunction apply_psdo_kn(const SymbolDescriptor& a, const GridFunction& f);

inline constexpr std::size_t kPsdoGeneralMaxN = 512;
inline constexpr std::size_t kFioMaxN = 1024;

/// Op_A(a) by the double Riemann sum over (y, xi) of
/// a(x - A(x - y), xi) f(y) exp(i (x - y) xi). d = 1, n <= 512.
GridFunction apply_psdo_general(const SymbolDescriptor& a,
                                const QuantizationMatrix& A,
                                const GridFunction& f);

/// (2 pi)^{-1} sum_xi exp(i phi(x, xi)) a(x, xi) f^(xi) dxi with |xi| < eps
/// dropped. d = 1, n <= 1024, a.support_cutoff required.
GridFunction apply_fio(const SymbolDescriptor& a, const ValidatedPhase& phase,
                       const GridFunction& f);

/// Symbol samples on the phase-space lattice: x on nx points of [-L, L)
/// per axis, xi = k dxi with k in [-nxi/2, nxi/2). Values are row-major
/// over (x_1..x_d, xi_1..xi_d).
struct SampledSymbol {
  int dim = 1;
  double extent = 1.0;
  std::size_t nx = 0;
  std::size_t nxi = 0;
  double dxi = 1.0;
  std::vector<cplx> values;

  double x_spacing() const { return 2.0 * extent / static_cast<double>(nx); }
  std::size_t size() const;
  /// Lattice value at (x, xi); throws SymbolEvaluationError when the point
  /// is not on the lattice.
  cplx at(std::span<const double> x, std::span<const double> xi) const;
};

/// Samples a for operators on the grid (dim, L, n): xi matches the operator
/// frequencies and x is refined by `x_refine` so that points (1-A)x + Ay
/// with A in {0, 1/2, 1} are lattice points when x_refine = 2.
SampledSymbol sample_symbol(const SymbolDescriptor& a, int dim, double extent,
                            std::size_t n, std::size_t x_refine = 2);

/// Wraps lattice samples as an x-and-xi symbol without derivative oracles.
SymbolDescriptor as_descriptor(const SampledSymbol& s, std::string name);

/// a2 with Op_{A2}(a2) = Op_{A1}(a1): the 2d-DFT of a1 multiplied by
/// exp(i <(A1 - A2) y, eta>), y dual to xi and eta dual to x.
SampledSymbol transfer_quantization(const SampledSymbol& a1,
                                    const QuantizationMatrix& A1,
                                    const QuantizationMatrix& A2);

}  // namespace orlicz
