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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orlicz/grid_function.hpp"

namespace orlicz {

/// Derivative orders: `x` acts on the space variables, `xi` on the
/// frequency variables. Only the first `dim` entries are used.
struct MultiIndex {
  std::array<int, 2> x{0, 0};
  std::array<int, 2> xi{0, 0};

  int x_order() const { return x[0] + x[1]; }
  int xi_order() const { return xi[0] + xi[1]; }
  int order() const { return x_order() + xi_order(); }
  bool operator==(const MultiIndex&) const = default;
};

/// All multi-indices in `dim` variables of total order exactly k.
std::vector<std::array<int, 2>> indices_of_order(int dim, int k);

enum class Arity { xi_only, x_and_xi };

using SymbolFn =
    std::function<cplx(std::span<const double> x, std::span<const double> xi)>;
/// Returns std::nullopt for multi-indices the oracle does not cover.
using SymbolDerivativeFn = std::function<std::optional<cplx>(
    const MultiIndex& alpha, std::span<const double> x, std::span<const double> xi)>;

/// A symbol a(x, xi) or a multiplier a(xi). For xi-only symbols the x
/// argument is ignored and may be empty.
struct SymbolDescriptor {
  std::string name;
  int dim = 1;
  Arity arity = Arity::xi_only;
  SymbolFn value;
  /// Exact partial derivatives (may be empty).
  SymbolDerivativeFn derivative;
  bool fd_fallback = true;
  /// a vanishes for |xi| < cutoff when set.
  std::optional<double> support_cutoff;
  /// a is undefined at xi = 0; multipliers use a(0) = 0 there.
  bool singular_at_origin = false;

  /// Value with the support cutoff applied.
  cplx operator()(std::span<const double> x, std::span<const double> xi) const;

  /// Partial derivative from the oracle, or from central finite differences
  /// when the oracle does not cover the multi-index. Throws CapabilityError
  /// when neither is available. Zero inside the cutoff region.
  cplx derivative_at(const MultiIndex& alpha, std::span<const double> x,
                     std::span<const double> xi) const;
};

/// Central finite difference of `value` for the given multi-index. The step
/// per axis is max(|v|, 1) * eps^{1/(k+2)} with k the total order.
cplx finite_difference(const SymbolFn& value, const MultiIndex& alpha, int dim,
                       std::span<const double> x, std::span<const double> xi);

using PhaseFn =
    std::function<double(std::span<const double> x, std::span<const double> xi)>;
using PhaseVectorFn = std::function<void(
    std::span<const double> x, std::span<const double> xi, std::span<double> out)>;

/// Real phase phi(x, xi), positively 1-homogeneous in xi != 0.
struct PhaseDescriptor {
  std::string name;
  int dim = 1;
  PhaseFn value;
  PhaseVectorFn grad_x;   ///< d entries
  PhaseVectorFn grad_xi;  ///< d entries
  /// d x d row-major, entry (j, k) = d/dx_j d/dxi_k phi.
  PhaseVectorFn mixed_hessian;
};

/// Catalog lookup. Symbols: identity, sgn, hilbert, riesz (params: j),
/// unimodular-power (gamma), bessel (r), sg-power (m, mu), smooth-s0
/// ((1 + sin(x)/2) xi / <xi>), sin-bessel (sin(x) / <xi>). Optional
/// trailing parameter `cutoff` is handled by the caller.
SymbolDescriptor make_symbol(const std::string& name, int dim,
                             std::span<const double> params);

/// Phases: flat (x.xi), translation (x xi + c|xi|, param c), perturbed
/// (x xi + kappa <x> |xi|, param kappa). Translation and perturbed are d = 1.
PhaseDescriptor make_phase(const std::string& name, int dim,
                           std::span<const double> params);

std::vector<std::string> symbol_catalog();
std::vector<std::string> phase_catalog();

/// <v> = sqrt(1 + |v|^2)
double japanese_bracket(std::span<const double> v);
double euclidean_norm(std::span<const double> v);

}  // namespace orlicz
