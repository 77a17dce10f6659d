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
#include "orlicz/young_function.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "orlicz/errors.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& logs) {
  double top = -kInf;
  for (double v : logs) top = std::max(top, v);
  if (!std::isfinite(top)) return top;
  double sum = 0.0;
  for (double v : logs) sum += std::exp(v - top);
  return top + std::log(sum);
}

// Exp-convolution quadrature truncates at s = 48: e^{-48} < 2e-21.
constexpr double kExpTail = 48.0;
constexpr double kExpPanel = 4.0;

}  // namespace

double Term::value(double t) const {
  switch (form) {
    case TermForm::power:
      return param == 0.0 ? coeff : coeff * std::pow(t, param);
    case TermForm::affine:
      return coeff * t - param;
    case TermForm::log:
      return coeff * t * std::log1p(t);
    case TermForm::exp:
      return coeff * std::expm1(t);
  }
  return 0.0;
}

double Term::derivative(double t) const {
  switch (form) {
    case TermForm::power:
      if (param == 0.0) return 0.0;
      if (param == 1.0) return coeff;
      return coeff * param * std::pow(t, param - 1.0);
    case TermForm::affine:
      return coeff;
    case TermForm::log:
      return coeff * (std::log1p(t) + t / (1.0 + t));
    case TermForm::exp:
      return coeff * std::exp(t);
  }
  return 0.0;
}

double Term::log_value(double t) const {
  if (coeff == 0.0 && form != TermForm::affine) return -kInf;
  switch (form) {
    case TermForm::power:
      if (param == 0.0) return std::log(coeff);
      return std::log(coeff) + param * std::log(t);
    case TermForm::affine: {
      const double v = value(t);
      return v > 0.0 ? std::log(v) : -kInf;
    }
    case TermForm::log:
      return std::log(coeff) + std::log(t) + std::log(std::log1p(t));
    case TermForm::exp:
      if (t > 30.0) return std::log(coeff) + t + std::log1p(-std::exp(-t));
      return std::log(coeff) + std::log(std::expm1(t));
  }
  return -kInf;
}

double Term::log_t_derivative(double t) const {
  const double d = derivative(t);
  if (d <= 0.0 || t <= 0.0) return -kInf;
  switch (form) {
    case TermForm::power:
      return std::log(coeff * param) + param * std::log(t);
    case TermForm::affine:
      return std::log(coeff * t);
    case TermForm::log:
      return std::log(coeff) + std::log(t) +
             std::log(std::log1p(t) + t / (1.0 + t));
    case TermForm::exp:
      return std::log(coeff) + std::log(t) + t;
  }
  return -kInf;
}

double Term::index_at_zero() const {
  switch (form) {
    case TermForm::power:
      return param;
    case TermForm::affine:
      return param == 0.0 ? 1.0 : 0.0;
    case TermForm::log:
      return 2.0;
    case TermForm::exp:
      return 1.0;
  }
  return 0.0;
}

double Term::index_at_infinity() const {
  switch (form) {
    case TermForm::power:
      return param;
    case TermForm::affine:
      return coeff != 0.0 ? 1.0 : 0.0;
    case TermForm::log:
      return 1.0;
    case TermForm::exp:
      return kInf;
  }
  return 0.0;
}

namespace {

double piece_value(const Piece& piece, double t) {
  double v = 0.0;
  for (const auto& term : piece.terms) v += term.value(t);
  return v;
}

double piece_derivative(const Piece& piece, double t) {
  double d = 0.0;
  for (const auto& term : piece.terms) d += term.derivative(t);
  return d;
}

double piece_log_value(const Piece& piece, double t) {
  const double v = piece_value(piece, t);
  if (std::isfinite(v)) return v > 0.0 ? std::log(v) : -kInf;
  std::vector<double> logs;
  for (const auto& term : piece.terms) logs.push_back(term.log_value(t));
  return log_sum_exp(logs);
}

double piece_elasticity(const Piece& piece, double t) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& term : piece.terms) {
    num += t * term.derivative(t);
    den += term.value(t);
  }
  if (std::isfinite(num) && std::isfinite(den) && den > 0.0) return num / den;
  std::vector<double> lnum;
  std::vector<double> lden;
  for (const auto& term : piece.terms) {
    lnum.push_back(term.log_t_derivative(t));
    lden.push_back(term.log_value(t));
  }
  return std::exp(log_sum_exp(lnum) - log_sum_exp(lden));
}

}  // namespace

struct YoungFunction::Impl {
  enum class Kind { analytic, mollified, exp_convolved, exp_convolution_only };
  Kind kind = Kind::analytic;
  std::string name;
  std::vector<double> params;
  std::vector<Piece> pieces;
  double finite_up_to = kInf;
  std::optional<YoungFunction> base;
  int nodes = 0;
  std::vector<double> mollifier_nodes;
  std::vector<double> mollifier_weights;

  std::size_t piece_index(double t, Side side) const {
    auto it = std::upper_bound(
        pieces.begin(), pieces.end(), t,
        [](double v, const Piece& p) { return v < p.start; });
    std::size_t idx = static_cast<std::size_t>(it - pieces.begin()) - 1;
    if (side == Side::left && idx > 0 && pieces[idx].start == t) --idx;
    return idx;
  }

  double exp_convolution(double t) const {
    if (t <= 0.0) return 0.0;
    const YoungFunction& phi = *base;
    const double reach = std::min(t, kExpTail);
    std::vector<double> cuts{0.0, reach};
    for (double b : phi.breakpoints()) {
      const double s = t - b;
      if (s > 0.0 && s < reach) cuts.push_back(s);
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double a = cuts[i];
      const double b = cuts[i + 1];
      if (b <= a) continue;
      const auto panels =
          static_cast<std::size_t>(std::ceil((b - a) / kExpPanel));
      total += integrate_composite(
          [&](double s) { return phi(std::max(0.0, t - s)) * std::exp(-s); },
          a, b, std::max<std::size_t>(panels, 1),
          static_cast<std::size_t>(nodes));
    }
    return total;
  }

  double value(double t) const {
    switch (kind) {
      case Kind::analytic:
        if (t > finite_up_to) return kInf;
        return piece_value(pieces[piece_index(t, Side::right)], t);
      case Kind::mollified: {
        double v = 0.0;
        for (std::size_t i = 0; i < mollifier_nodes.size(); ++i) {
          v += mollifier_weights[i] *
               (*base)(t - 0.5 * mollifier_nodes[i] * t);
        }
        return v;
      }
      case Kind::exp_convolved:
        return (*base)(t) + exp_convolution(t);
      case Kind::exp_convolution_only:
        return exp_convolution(t);
    }
    return 0.0;
  }

  double numeric_derivative(double t, Side side) const {
    auto f = [this](double s) {
      return kind == Kind::mollified ? value(s) : exp_convolution(s);
    };
    if (t == 0.0) {
      if (side == Side::left) {
        throw DomainError("left derivative at t = 0 is undefined");
      }
      const double h = 1e-6;
      const double d1 = f(h) / h;
      const double d2 = f(0.5 * h) / (0.5 * h);
      return 2.0 * d2 - d1;
    }
    const double h = t * 1e-5;
    return (f(t + h) - f(t - h)) / (2.0 * h);
  }
};

YoungFunction::YoungFunction(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

YoungFunction YoungFunction::piecewise(std::vector<Piece> pieces,
                                       std::string kind,
                                       std::vector<double> params,
                                       double finite_up_to) {
  if (pieces.empty()) throw PreconditionError("Young function has no pieces");
  if (pieces.front().start != 0.0) {
    throw PreconditionError("first piece must start at t = 0");
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& piece = pieces[i];
    if (piece.terms.empty()) throw PreconditionError("piece without terms");
    if (!std::isfinite(piece.start) ||
        (i > 0 && piece.start <= pieces[i - 1].start)) {
      throw PreconditionError("piece starts must be finite and increasing");
    }
    for (const auto& term : piece.terms) {
      if (!std::isfinite(term.coeff) || !std::isfinite(term.param)) {
        throw PreconditionError("non-finite term coefficient");
      }
      const bool bad_power =
          term.form == TermForm::power &&
          (term.coeff < 0.0 || (term.param != 0.0 && term.param < 1.0));
      const bool bad_sign =
          (term.form == TermForm::log || term.form == TermForm::exp) &&
          term.coeff < 0.0;
      if (bad_power || bad_sign) {
        throw PreconditionError("term is not convex and non-negative");
      }
    }
  }
  if (!(finite_up_to > 0.0)) {
    throw PreconditionError("finiteness threshold must be positive");
  }

  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::analytic;
  impl->name = std::move(kind);
  impl->params = std::move(params);
  impl->pieces = std::move(pieces);
  impl->finite_up_to = finite_up_to;
  const auto& ps = impl->pieces;

  if (std::abs(piece_value(ps.front(), 0.0)) > 1e-12) {
    throw PreconditionError("Young function must vanish at the origin");
  }
  if (piece_derivative(ps.front(), 0.0) < 0.0) {
    throw PreconditionError("Young function must be non-decreasing");
  }
  for (std::size_t i = 1; i < ps.size(); ++i) {
    const double b = ps[i].start;
    const double left = piece_value(ps[i - 1], b);
    const double right = piece_value(ps[i], b);
    const double scale = std::max(1.0, std::abs(left));
    if (std::abs(left - right) > 1e-9 * scale) {
      throw PreconditionError("Young function is discontinuous at a breakpoint");
    }
    const double dl = piece_derivative(ps[i - 1], b);
    const double dr = piece_derivative(ps[i], b);
    if (dl > dr + 1e-9 * std::max(1.0, std::abs(dl))) {
      throw PreconditionError("one-sided derivatives decrease at a breakpoint");
    }
  }
  bool grows = false;
  for (const auto& term : ps.back().terms) {
    if (term.coeff > 0.0 && term.index_at_infinity() >= 1.0) grows = true;
  }
  if (!grows) throw PreconditionError("Young function must tend to infinity");
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::mollified(const YoungFunction& base, int nodes) {
  if (nodes < 2) throw PreconditionError("mollifier needs at least 2 nodes");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::mollified;
  impl->name = "smooth_equivalent";
  impl->params = {static_cast<double>(nodes)};
  impl->base = base;
  impl->nodes = nodes;
  double total = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double s = (i + 0.5) / nodes;
    const double u = 2.0 * s - 1.0;
    const double w = std::exp(-1.0 / (1.0 - u * u));
    impl->mollifier_nodes.push_back(s);
    impl->mollifier_weights.push_back(w);
    total += w;
  }
  for (double& w : impl->mollifier_weights) w /= total;
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::exp_convolved(const YoungFunction& base,
                                           int nodes) {
  if (nodes < 1) throw PreconditionError("quadrature needs at least 1 node");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::exp_convolved;
  impl->name = "strictly_convex_equivalent";
  impl->params = {static_cast<double>(nodes)};
  impl->base = base;
  impl->nodes = nodes;
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::exp_convolution_only(const YoungFunction& base,
                                                  int nodes) {
  if (nodes < 1) throw PreconditionError("quadrature needs at least 1 node");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::exp_convolution_only;
  impl->name = "exp_convolution";
  impl->params = {static_cast<double>(nodes)};
  impl->base = base;
  impl->nodes = nodes;
  return YoungFunction(std::move(impl));
}

double YoungFunction::operator()(double t) const { return impl_->value(t); }

double YoungFunction::derivative(double t, Side side) const {
  const Impl& m = *impl_;
  switch (m.kind) {
    case Impl::Kind::analytic: {
      if (t == 0.0 && side == Side::left) {
        throw DomainError("left derivative at t = 0 is undefined");
      }
      return piece_derivative(m.pieces[m.piece_index(t, side)], t);
    }
    case Impl::Kind::mollified:
    case Impl::Kind::exp_convolution_only:
      return m.numeric_derivative(t, side);
    case Impl::Kind::exp_convolved:
      return m.base->derivative(t, side) + m.numeric_derivative(t, side);
  }
  return 0.0;
}

double YoungFunction::log_value(double t) const {
  const Impl& m = *impl_;
  if (m.kind == Impl::Kind::analytic) {
    if (t > m.finite_up_to) return kInf;
    return piece_log_value(m.pieces[m.piece_index(t, Side::right)], t);
  }
  const double v = m.value(t);
  return v > 0.0 ? std::log(v) : -kInf;
}

double YoungFunction::elasticity(double t, Side side) const {
  const Impl& m = *impl_;
  if (m.kind == Impl::Kind::analytic) {
    const std::size_t idx = m.piece_index(t, side);
    return piece_elasticity(m.pieces[idx], t);
  }
  return t * derivative(t, side) / m.value(t);
}

double YoungFunction::index_at_zero() const {
  const Impl& m = *impl_;
  if (m.kind != Impl::Kind::analytic) return m.base->index_at_zero();
  double idx = kInf;
  for (const auto& term : m.pieces.front().terms) {
    if (term.coeff != 0.0) idx = std::min(idx, term.index_at_zero());
  }
  return idx;
}

double YoungFunction::index_at_infinity() const {
  const Impl& m = *impl_;
  if (m.kind != Impl::Kind::analytic) return m.base->index_at_infinity();
  if (std::isfinite(m.finite_up_to)) return kInf;
  double idx = 0.0;
  for (const auto& term : m.pieces.back().terms) {
    if (term.coeff != 0.0) idx = std::max(idx, term.index_at_infinity());
  }
  return idx;
}

bool YoungFunction::finite_everywhere() const {
  return std::isinf(finite_up_to());
}

double YoungFunction::finite_up_to() const {
  const Impl& m = *impl_;
  if (m.kind != Impl::Kind::analytic) return m.base->finite_up_to();
  return m.finite_up_to;
}

std::vector<double> YoungFunction::breakpoints() const {
  const Impl& m = *impl_;
  switch (m.kind) {
    case Impl::Kind::analytic: {
      std::vector<double> out;
      for (std::size_t i = 1; i < m.pieces.size(); ++i) {
        out.push_back(m.pieces[i].start);
      }
      return out;
    }
    case Impl::Kind::exp_convolved:
      return m.base->breakpoints();
    default:
      return {};
  }
}

const std::string& YoungFunction::kind() const { return impl_->name; }
const std::vector<double>& YoungFunction::params() const {
  return impl_->params;
}
const std::vector<Piece>& YoungFunction::pieces() const {
  return impl_->pieces;
}
const YoungFunction* YoungFunction::base() const {
  return impl_->base ? &*impl_->base : nullptr;
}
int YoungFunction::quadrature_nodes() const { return impl_->nodes; }
bool YoungFunction::quadrature_defined() const {
  return impl_->kind != Impl::Kind::analytic;
}

bool YoungFunction::is_linear() const {
  const Impl& m = *impl_;
  if (m.kind != Impl::Kind::analytic || m.pieces.size() != 1) return false;
  const auto& terms = m.pieces.front().terms;
  if (terms.size() != 1) return false;
  const Term& term = terms.front();
  return (term.form == TermForm::power && term.param == 1.0) ||
         (term.form == TermForm::affine && term.param == 0.0);
}

std::string to_string(Builtin name) {
  switch (name) {
    case Builtin::power:
      return "power";
    case Builtin::entropy:
      return "entropy";
    case Builtin::counterexample:
      return "counterexample";
    case Builtin::exp_minus_one:
      return "exp_minus_one";
    case Builtin::affine:
      return "affine";
  }
  return "unknown";
}

YoungFunction make_builtin(Builtin name, std::span<const double> params) {
  auto param = [&](std::size_t i, double fallback) {
    return i < params.size() ? params[i] : fallback;
  };
  std::vector<double> stored(params.begin(), params.end());
  switch (name) {
    case Builtin::power: {
      if (params.empty()) throw PreconditionError("power needs an exponent");
      const double p = params[0];
      const double c = param(1, 1.0);
      if (!(p >= 1.0)) {
        throw PreconditionError("power(p) with p < 1 is not convex");
      }
      if (!(c > 0.0)) throw PreconditionError("power scale must be positive");
      return YoungFunction::piecewise(
          {{0.0, {{TermForm::power, c, p}}}}, "power", stored);
    }
    case Builtin::entropy: {
      const double c = param(0, 1.0);
      if (!(c > 0.0)) throw PreconditionError("entropy scale must be positive");
      return YoungFunction::piecewise({{0.0, {{TermForm::log, c, 0.0}}}},
                                      "entropy", stored);
    }
    case Builtin::counterexample:
      return YoungFunction::piecewise(
          {{0.0, {{TermForm::power, 2.0, 2.0}}},
           {1.0, {{TermForm::affine, 4.0, 2.0}}},
           {2.0, {{TermForm::power, 1.0, 2.0}, {TermForm::affine, 0.0, -2.0}}}},
          "counterexample", stored);
    case Builtin::exp_minus_one: {
      const double c = param(0, 1.0);
      if (!(c > 0.0)) throw PreconditionError("exp scale must be positive");
      return YoungFunction::piecewise({{0.0, {{TermForm::exp, c, 0.0}}}},
                                      "exp_minus_one", stored);
    }
    case Builtin::affine: {
      const double a = param(0, 1.0);
      const double b = param(1, 0.0);
      if (b != 0.0) {
        throw PreconditionError("affine Young function needs b = 0");
      }
      if (!(a > 0.0)) throw PreconditionError("affine slope must be positive");
      return YoungFunction::piecewise({{0.0, {{TermForm::affine, a, 0.0}}}},
                                      "affine", stored);
    }
  }
  throw PreconditionError("unknown built-in");
}

YoungFunction make_builtin(const std::string& name,
                           std::span<const double> params) {
  for (Builtin b : {Builtin::power, Builtin::entropy, Builtin::counterexample,
                    Builtin::exp_minus_one, Builtin::affine}) {
    if (to_string(b) == name) return make_builtin(b, params);
  }
  throw FormatError("unknown Young function '" + name + "'");
}

double eval(const YoungFunction& phi, double t) {
  if (!(t >= 0.0)) throw DomainError("Young functions are defined on t >= 0");
  if (t == 0.0) return 0.0;
  return phi(t);
}

double one_sided_derivative(const YoungFunction& phi, double t, Side side) {
  if (!(t >= 0.0)) throw DomainError("derivative requested at t < 0");
  if (!std::isfinite(phi(t))) {
    throw DomainError("derivative requested where Phi is infinite");
  }
  return phi.derivative(t, side);
}

double inverse(const YoungFunction& phi, double y, double rel_tol) {
  if (!(y > 0.0)) return 0.0;
  double hi = 1.0;
  int guard = 0;
  while (phi(hi) < y) {
    hi *= 2.0;
    if (++guard > 2100) throw DivergenceError("Phi never reaches the level");
  }
  double lo = 0.0;
  guard = 0;
  while (phi(lo = hi * 0.5) >= y && lo > 0.0) {
    hi = lo;
    if (++guard > 2100) return 0.0;
  }
  for (int i = 0; i < 400 && hi - lo > rel_tol * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (phi(mid) >= y) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace orlicz
