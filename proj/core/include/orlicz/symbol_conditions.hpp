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

#include "orlicz/symbols.hpp"
#include "orlicz/young_calculus.hpp"

namespace orlicz {

/// Log-spaced radii 1e-2 .. 1e3 used by the Mihlin scan.
GridConfig default_radial_probe();
/// Coarser radii for the (x, xi) seminorm and phase scans.
GridConfig default_phase_space_probe();

struct MihlinEntry {
  MultiIndex alpha;
  double sup = 0.0;
};

struct MihlinResult {
  std::vector<MihlinEntry> table;
  double max = 0.0;
};

/// sup over a log-radial probe of |xi|^{|alpha|} |d^alpha a(xi)| for every
/// |alpha| <= floor(d/2) + 1. d = 1 probes both signs, d = 2 uses 64
/// directions.
MihlinResult mihlin_functional(const SymbolDescriptor& a, int dim,
                               const GridConfig& probe = default_radial_probe());

struct HormanderEntry {
  MultiIndex alpha;
  double radius = 0.0;
  double value = 0.0;
  /// d = 1 only: contributions of (-2R, -R) and (R, 2R).
  double negative_side = 0.0;
  double positive_side = 0.0;
};

struct HormanderResult {
  std::vector<HormanderEntry> table;
  double max = 0.0;
};

/// {2^k : kmin <= k <= kmax}
std::vector<double> dyadic_radii(int kmin = -10, int kmax = 10);

/// max over alpha and R of R^{-d + 2|alpha|} int_{R<|xi|<2R} |d^alpha a|^2.
/// Empty `radii` means dyadic_radii().
HormanderResult hormander_functional(const SymbolDescriptor& a, int dim,
                                     std::span<const double> radii = {});

/// Probe supremum of a weighted derivative sum. `finite` is decided by the
/// top-decade slopes of the running-max envelopes in |x| and |xi|.
struct SeminormResult {
  double value = 0.0;
  double x_slope = 0.0;
  double xi_slope = 0.0;
  bool finite = false;
  std::size_t probe_count = 0;
};

/// sum over |alpha|, |beta| <= N of <xi>^{-r + rho|alpha| - delta|beta|}
/// |D_xi^alpha D_x^beta a|.
SeminormResult hormander_class_seminorm(
    const SymbolDescriptor& a, double r, double rho, double delta, int order,
    const GridConfig& probe = default_phase_space_probe());

/// sum over |alpha|, |beta| <= N of <x>^{-m + |alpha|} <xi>^{-mu + |beta|}
/// |D_x^alpha D_xi^beta a|.
SeminormResult sg_seminorm(const SymbolDescriptor& a, double m, double mu,
                           int order,
                           const GridConfig& probe = default_phase_space_probe());

struct PhaseReport {
  double det_lower_bound = 0.0;
  double homogeneity_residual = 0.0;
  double xi_gradient_ratio_min = 0.0;  ///< <phi'_xi> / <x>
  double xi_gradient_ratio_max = 0.0;
  double x_gradient_ratio_min = 0.0;   ///< <phi'_x> / <xi>
  double x_gradient_ratio_max = 0.0;
  /// max of |d_x^alpha phi| / (<x>^{1-|alpha|} |xi|) for |alpha| = 0, 1, 2.
  std::array<double, 3> growth{};
  std::size_t probe_count = 0;

  /// det >= 1e-6, residual <= 1e-8, ratios and growth within [1/100, 100].
  bool acceptable() const;
};

PhaseReport validate_phase(const PhaseDescriptor& phase,
                           const GridConfig& probe = default_phase_space_probe());

/// A phase that passed validate_phase. The only way to obtain one is
/// ValidatedPhase::accept, which throws PreconditionError on rejection.
class ValidatedPhase {
 public:
  static ValidatedPhase accept(const PhaseDescriptor& phase,
                               const GridConfig& probe = default_phase_space_probe());

  const PhaseDescriptor& phase() const { return phase_; }
  const PhaseReport& report() const { return report_; }

 private:
  ValidatedPhase(PhaseDescriptor phase, PhaseReport report)
      : phase_(std::move(phase)), report_(report) {}
  PhaseDescriptor phase_;
  PhaseReport report_;
};

}  // namespace orlicz
