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

#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace orlicz {

/// Analytic building blocks of a Young function piece.
enum class TermForm {
  power,   ///< coeff * t^param   (param == 0 or param >= 1)
  affine,  ///< coeff * t - param
  log,     ///< coeff * t * ln(1 + t)
  exp,     ///< coeff * (e^t - 1)
};

struct Term {
  TermForm form = TermForm::power;
  double coeff = 1.0;
  double param = 1.0;

  double value(double t) const;
  double derivative(double t) const;
  /// log(value(t)); -inf where the term vanishes. Stable for large t.
  double log_value(double t) const;
  /// log(t * derivative(t)); -inf where it vanishes.
  double log_t_derivative(double t) const;
  /// Limits of t f'(t) / f(t) as t -> 0+ and t -> infinity.
  double index_at_zero() const;
  double index_at_infinity() const;
};

/// One analytic piece, active on [start, next piece's start).
struct Piece {
  double start = 0.0;
  std::vector<Term> terms;
};

enum class Side { left, right };

/// Built-in Young functions.
enum class Builtin { power, entropy, counterexample, exp_minus_one, affine };

/// A convex Phi: [0, inf) -> [0, inf] with Phi(0) = 0 and Phi -> inf.
///
/// Either piecewise analytic, with exact one-sided derivatives, or defined
/// by a quadrature over another Young function (the smooth and strictly
/// convex equivalents); the latter differentiate by central differences.
/// Immutable and cheap to copy.
class YoungFunction {
 public:
  /// Piecewise analytic function. Validates Phi(0) = 0, continuity at
  /// breakpoints and monotone one-sided derivatives across them.
  static YoungFunction piecewise(std::vector<Piece> pieces,
                                 std::string kind = "piecewise",
                                 std::vector<double> params = {},
                                 double finite_up_to = INFINITY_MARKER);

  /// Psi(t) = sum_i w_i Phi(t - s_i t / 2), the midpoint-rule discretization
  /// of the integral against the normalized bump on [0, 1].
  static YoungFunction mollified(const YoungFunction& base, int nodes);

  /// Phi_1(t) = Phi(t) + Psi(t), Psi(t) = int_0^t Phi(t - s) e^{-s} ds by
  /// composite Gauss-Legendre with `nodes` points per panel.
  static YoungFunction exp_convolved(const YoungFunction& base, int nodes);

  /// Psi alone (without adding Phi), same quadrature as exp_convolved.
  static YoungFunction exp_convolution_only(const YoungFunction& base,
                                            int nodes);

  double operator()(double t) const;
  double derivative(double t, Side side) const;
  double log_value(double t) const;
  /// t Phi'_+(t) / Phi(t), evaluated in log space where needed.
  double elasticity(double t, Side side = Side::right) const;

  double index_at_zero() const;
  double index_at_infinity() const;

  bool finite_everywhere() const;
  double finite_up_to() const;
  /// Interior breakpoints where the active piece changes.
  std::vector<double> breakpoints() const;

  const std::string& kind() const;
  const std::vector<double>& params() const;
  /// Empty for quadrature-defined functions.
  const std::vector<Piece>& pieces() const;
  /// Base function of a quadrature-defined construction, else nullptr.
  const YoungFunction* base() const;
  int quadrature_nodes() const;
  bool quadrature_defined() const;
  /// True when every piece is a single linear term (Phi(t) = a t).
  bool is_linear() const;

  static constexpr double INFINITY_MARKER =
      std::numeric_limits<double>::infinity();

  struct Impl;

 private:
  explicit YoungFunction(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Exact built-ins. power(p [, c]) requires p >= 1; affine(a [, b]) requires
/// a > 0 and b == 0; entropy(c) and exp_minus_one(c) take an optional scale.
YoungFunction make_builtin(Builtin name, std::span<const double> params = {});
YoungFunction make_builtin(const std::string& name,
                           std::span<const double> params = {});
std::string to_string(Builtin name);

/// Phi(t); throws DomainError for t < 0.
double eval(const YoungFunction& phi, double t);

/// Exact one-sided derivative. At a breakpoint the right side reads the next
/// piece and the left side the previous one.
double one_sided_derivative(const YoungFunction& phi, double t, Side side);

/// Smallest t >= 0 with Phi(t) >= y (monotone inverse), found by bracketing
/// and bisection to relative precision `rel_tol`.
double inverse(const YoungFunction& phi, double y, double rel_tol = 1e-15);

}  // namespace orlicz
