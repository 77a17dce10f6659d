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
#include "orlicz/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double param_or(std::span<const double> params, std::size_t i, double fallback) {
  return i < params.size() ? params[i] : fallback;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// d^k/dt^k (1 + t^2)^s = P_k(t) (1 + t^2)^{s - k} with
// P_{k+1} = P_k' (1 + t^2) + 2 (s - k) t P_k.
double bracket_power_1d(double t, int k, double s) {
  std::vector<double> poly{1.0};
  for (int j = 0; j < k; ++j) {
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 1; i < poly.size(); ++i) {
      const double d = static_cast<double>(i) * poly[i];
      next[i - 1] += d;
      next[i + 1] += d;
    }
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += 2.0 * (s - j) * poly[i];
    }
    poly = std::move(next);
  }
  double p = 0.0;
  for (std::size_t i = poly.size(); i-- > 0;) p = p * t + poly[i];
  return p * std::pow(1.0 + t * t, s - k);
}

// Partial derivative of <v>^r in `dim` variables; exact for d = 1 at any
// order and for d = 2 up to order 2.
std::optional<double> bracket_power(std::span<const double> v,
                                    const std::array<int, 2>& idx, double r,
                                    int dim) {
  const double s = 0.5 * r;
  if (dim == 1) return bracket_power_1d(v[0], idx[0], s);
  const int order = idx[0] + idx[1];
  const double u = 1.0 + v[0] * v[0] + v[1] * v[1];
  if (order == 0) return std::pow(u, s);
  if (order == 1) {
    const int j = idx[0] == 1 ? 0 : 1;
    return r * v[j] * std::pow(u, s - 1.0);
  }
  if (order == 2) {
    const int j = idx[0] >= 1 ? 0 : 1;
    const int k = idx[1] >= 1 ? 1 : 0;
    const double delta = j == k ? 1.0 : 0.0;
    return r * (delta * std::pow(u, s - 1.0) +
                (r - 2.0) * v[j] * v[k] * std::pow(u, s - 2.0));
  }
  return std::nullopt;
}

// d^a/dx^a of (1 + sin(x)/2).
double smooth_factor(double x, int a) {
  if (a == 0) return 1.0 + 0.5 * std::sin(x);
  return 0.5 * std::sin(x + a * std::numbers::pi / 2.0);
}

// d^k/dxi^k of xi <xi>^{-1} by Leibniz.
double xi_over_bracket(double xi, int k) {
  double out = xi * bracket_power_1d(xi, k, -0.5);
  if (k >= 1) out += k * bracket_power_1d(xi, k - 1, -0.5);
  return out;
}

bool zero_xi(std::span<const double> xi) {
  return std::all_of(xi.begin(), xi.end(), [](double v) { return v == 0.0; });
}

// Derivatives of xi_j / |xi| up to order 2.
std::optional<double> riesz_derivative(std::span<const double> xi,
                                       const std::array<int, 2>& idx, int j,
                                       int dim) {
  const double r = euclidean_norm(xi);
  const int order = dim == 1 ? idx[0] : idx[0] + idx[1];
  if (order > 2) return std::nullopt;
  std::array<int, 2> axes{};
  int count = 0;
  for (int a = 0; a < dim; ++a) {
    for (int m = 0; m < idx[a]; ++m) axes[count++] = a;
  }
  auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  if (order == 0) return xi[j] / r;
  if (order == 1) {
    const int l = axes[0];
    return delta(j, l) / r - xi[j] * xi[l] / (r * r * r);
  }
  if (order == 2) {
    const int k = axes[0];
    const int l = axes[1];
    const double r3 = r * r * r;
    return -delta(j, l) * xi[k] / r3 -
           (delta(j, k) * xi[l] + delta(l, k) * xi[j]) / r3 +
           3.0 * xi[j] * xi[l] * xi[k] / (r3 * r * r);
  }
  return std::nullopt;
}

SymbolDescriptor identity_symbol(int dim) {
  SymbolDescriptor a;
  a.name = "identity";
  a.dim = dim;
  a.value = [](auto, auto) { return cplx(1.0); };
  a.derivative = [](const MultiIndex& alpha, auto, auto) -> std::optional<cplx> {
    return cplx(alpha.order() == 0 ? 1.0 : 0.0);
  };
  return a;
}

SymbolDescriptor sign_symbol(int dim, cplx factor, std::string name) {
  if (dim != 1) throw PreconditionError(name + " is a one-dimensional symbol");
  SymbolDescriptor a;
  a.name = std::move(name);
  a.dim = 1;
  a.singular_at_origin = true;
  a.value = [factor](auto, std::span<const double> xi) {
    if (xi[0] == 0.0) return cplx(kNaN);
    return factor * (xi[0] > 0.0 ? 1.0 : -1.0);
  };
  a.derivative = [factor](const MultiIndex& alpha, auto,
                          std::span<const double> xi) -> std::optional<cplx> {
    if (xi[0] == 0.0) return cplx(kNaN);
    if (alpha.order() == 0) return factor * (xi[0] > 0.0 ? 1.0 : -1.0);
    return cplx(0.0);
  };
  return a;
}

SymbolDescriptor riesz_symbol(int dim, int j) {
  if (j < 1 || j > dim) throw PreconditionError("riesz index must be in 1..d");
  SymbolDescriptor a;
  a.name = "riesz";
  a.dim = dim;
  a.singular_at_origin = true;
  const int axis = j - 1;
  a.value = [axis](auto, std::span<const double> xi) {
    const double r = euclidean_norm(xi);
    if (r == 0.0) return cplx(kNaN);
    return cplx(0.0, -xi[axis] / r);
  };
  a.derivative = [axis, dim](const MultiIndex& alpha, auto,
                             std::span<const double> xi) -> std::optional<cplx> {
    if (alpha.x_order() > 0) return cplx(0.0);
    auto v = riesz_derivative(xi, alpha.xi, axis, dim);
    if (!v) return std::nullopt;
    return cplx(0.0, -*v);
  };
  return a;
}

SymbolDescriptor unimodular_symbol(int dim, double gamma) {
  SymbolDescriptor a;
  a.name = "unimodular-power";
  a.dim = dim;
  a.singular_at_origin = true;
  const cplx s(0.0, gamma);
  a.value = [s](auto, std::span<const double> xi) {
    const double r = euclidean_norm(xi);
    if (r == 0.0) return cplx(kNaN);
    return std::exp(s * std::log(r));
  };
  a.derivative = [s, dim](const MultiIndex& alpha, auto,
                          std::span<const double> xi) -> std::optional<cplx> {
    if (alpha.x_order() > 0) return cplx(0.0);
    const double r = euclidean_norm(xi);
    if (r == 0.0) return cplx(kNaN);
    const double lr = std::log(r);
    if (dim == 1) {
      const int k = alpha.xi[0];
      cplx c(1.0);
      for (int m = 0; m < k; ++m) c *= s - static_cast<double>(m);
      const double sign = (xi[0] < 0.0 && k % 2 == 1) ? -1.0 : 1.0;
      return sign * c * std::exp((s - static_cast<double>(k)) * lr);
    }
    const int order = alpha.xi_order();
    if (order == 0) return std::exp(s * lr);
    if (order == 1) {
      const int j = alpha.xi[0] == 1 ? 0 : 1;
      return s * xi[j] * std::exp((s - 2.0) * lr);
    }
    if (order == 2) {
      const int j = alpha.xi[0] >= 1 ? 0 : 1;
      const int k = alpha.xi[1] >= 1 ? 1 : 0;
      const double delta = j == k ? 1.0 : 0.0;
      return s * ((s - 2.0) * xi[j] * xi[k] * std::exp((s - 4.0) * lr) +
                  delta * std::exp((s - 2.0) * lr));
    }
    return std::nullopt;
  };
  return a;
}

SymbolDescriptor bessel_symbol(int dim, double r) {
  SymbolDescriptor a;
  a.name = "bessel";
  a.dim = dim;
  a.value = [r](auto, std::span<const double> xi) {
    return cplx(std::pow(japanese_bracket(xi), r));
  };
  a.derivative = [r, dim](const MultiIndex& alpha, auto,
                          std::span<const double> xi) -> std::optional<cplx> {
    if (alpha.x_order() > 0) return cplx(0.0);
    auto v = bracket_power(xi, alpha.xi, r, dim);
    if (!v) return std::nullopt;
    return cplx(*v);
  };
  return a;
}

SymbolDescriptor sg_power_symbol(int dim, double m, double mu) {
  SymbolDescriptor a;
  a.name = "sg-power";
  a.dim = dim;
  a.arity = Arity::x_and_xi;
  a.value = [m, mu](std::span<const double> x, std::span<const double> xi) {
    return cplx(std::pow(japanese_bracket(x), m) *
                std::pow(japanese_bracket(xi), mu));
  };
  a.derivative = [m, mu, dim](const MultiIndex& alpha, std::span<const double> x,
                              std::span<const double> xi) -> std::optional<cplx> {
    auto fx = bracket_power(x, alpha.x, m, dim);
    auto fxi = bracket_power(xi, alpha.xi, mu, dim);
    if (!fx || !fxi) return std::nullopt;
    return cplx(*fx * *fxi);
  };
  return a;
}

SymbolDescriptor smooth_s0_symbol(int dim) {
  if (dim != 1) throw PreconditionError("smooth-s0 is a one-dimensional symbol");
  SymbolDescriptor a;
  a.name = "smooth-s0";
  a.arity = Arity::x_and_xi;
  a.value = [](std::span<const double> x, std::span<const double> xi) {
    return cplx(smooth_factor(x[0], 0) * xi_over_bracket(xi[0], 0));
  };
  a.derivative = [](const MultiIndex& alpha, std::span<const double> x,
                    std::span<const double> xi) -> std::optional<cplx> {
    return cplx(smooth_factor(x[0], alpha.x[0]) *
                xi_over_bracket(xi[0], alpha.xi[0]));
  };
  return a;
}

SymbolDescriptor sin_bessel_symbol(int dim) {
  if (dim != 1) throw PreconditionError("sin-bessel is a one-dimensional symbol");
  SymbolDescriptor a;
  a.name = "sin-bessel";
  a.arity = Arity::x_and_xi;
  a.value = [](std::span<const double> x, std::span<const double> xi) {
    return cplx(std::sin(x[0]) / japanese_bracket(xi));
  };
  a.derivative = [](const MultiIndex& alpha, std::span<const double> x,
                    std::span<const double> xi) -> std::optional<cplx> {
    const double sx = std::sin(x[0] + alpha.x[0] * std::numbers::pi / 2.0);
    return cplx(sx * bracket_power_1d(xi[0], alpha.xi[0], -0.5));
  };
  return a;
}

SymbolDescriptor x_xi_symbol(int dim, double sigma_x, double sigma_xi) {
  if (dim != 1) throw PreconditionError("x-xi is a one-dimensional symbol");
  SymbolDescriptor a;
  a.arity = Arity::x_and_xi;
  if (sigma_x > 0.0 && sigma_xi > 0.0) {
    a.name = "windowed-x-xi";
    a.value = [sigma_x, sigma_xi](std::span<const double> x,
                                  std::span<const double> xi) {
      const double wx = std::exp(-0.5 * x[0] * x[0] / (sigma_x * sigma_x));
      const double wxi = std::exp(-0.5 * xi[0] * xi[0] / (sigma_xi * sigma_xi));
      return cplx(x[0] * xi[0] * wx * wxi);
    };
  } else {
    a.name = "x-xi";
    a.value = [](std::span<const double> x, std::span<const double> xi) {
      return cplx(x[0] * xi[0]);
    };
  }
  return a;
}

}  // namespace

double euclidean_norm(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

double japanese_bracket(std::span<const double> v) {
  double s = 1.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

std::vector<std::array<int, 2>> indices_of_order(int dim, int k) {
  std::vector<std::array<int, 2>> out;
  if (dim == 1) {
    out.push_back({k, 0});
  } else {
    for (int a = k; a >= 0; --a) out.push_back({a, k - a});
  }
  return out;
}

cplx SymbolDescriptor::operator()(std::span<const double> x,
                                  std::span<const double> xi) const {
  if (support_cutoff && euclidean_norm(xi) < *support_cutoff) return 0.0;
  if (singular_at_origin && zero_xi(xi)) return 0.0;
  return value(x, xi);
}

cplx SymbolDescriptor::derivative_at(const MultiIndex& alpha,
                                     std::span<const double> x,
                                     std::span<const double> xi) const {
  if (support_cutoff && euclidean_norm(xi) < *support_cutoff) return 0.0;
  if (arity == Arity::xi_only && alpha.x_order() > 0) return 0.0;
  if (derivative) {
    if (auto v = derivative(alpha, x, xi)) return *v;
  }
  if (!fd_fallback) {
    throw CapabilityError("symbol '" + name +
                          "' has no derivative of the requested order and "
                          "finite differences are disabled");
  }
  return finite_difference(value, alpha, dim, x, xi);
}

cplx finite_difference(const SymbolFn& value, const MultiIndex& alpha, int dim,
                       std::span<const double> x, std::span<const double> xi) {
  const auto d = static_cast<std::size_t>(dim);
  std::vector<double> point(2 * d, 0.0);
  std::vector<int> orders(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (i < x.size()) point[i] = x[i];
    point[d + i] = xi[i];
    orders[i] = alpha.x[i];
    orders[d + i] = alpha.xi[i];
  }
  const int total = alpha.order();
  const double base = std::pow(std::numeric_limits<double>::epsilon(),
                               1.0 / static_cast<double>(total + 2));

  std::function<cplx(std::size_t, std::vector<double>&)> rec =
      [&](std::size_t var, std::vector<double>& p) -> cplx {
    if (var == p.size()) {
      return value(std::span<const double>(p.data(), d),
                   std::span<const double>(p.data() + d, d));
    }
    const int k = orders[var];
    if (k == 0) return rec(var + 1, p);
    const double center = p[var];
    const double h = std::max(std::abs(center), 1.0) * base;
    cplx acc = 0.0;
    for (int j = 0; j <= k; ++j) {
      p[var] = center + (0.5 * k - j) * h;
      const double w = ((j % 2 == 0) ? 1.0 : -1.0) * binomial(k, j);
      acc += w * rec(var + 1, p);
    }
    p[var] = center;
    return acc / std::pow(h, k);
  };
  return rec(0, point);
}

SymbolDescriptor make_symbol(const std::string& name, int dim,
                             std::span<const double> params) {
  if (dim != 1 && dim != 2) throw PreconditionError("symbols support d = 1 or 2");
  if (name == "identity") return identity_symbol(dim);
  if (name == "sgn") return sign_symbol(dim, 1.0, "sgn");
  if (name == "hilbert") return sign_symbol(dim, cplx(0.0, -1.0), "hilbert");
  if (name == "riesz") {
    return riesz_symbol(dim, static_cast<int>(param_or(params, 0, 1.0)));
  }
  if (name == "unimodular-power") {
    return unimodular_symbol(dim, param_or(params, 0, 1.0));
  }
  if (name == "bessel") return bessel_symbol(dim, param_or(params, 0, 1.0));
  if (name == "sg-power") {
    return sg_power_symbol(dim, param_or(params, 0, 0.0),
                           param_or(params, 1, 0.0));
  }
  if (name == "smooth-s0") return smooth_s0_symbol(dim);
  if (name == "sin-bessel") return sin_bessel_symbol(dim);
  if (name == "x-xi") return x_xi_symbol(dim, 0.0, 0.0);
  if (name == "windowed-x-xi") {
    return x_xi_symbol(dim, param_or(params, 0, 1.2), param_or(params, 1, 4.0));
  }
  throw PreconditionError("unknown symbol '" + name + "'");
}

std::vector<std::string> symbol_catalog() {
  return {"identity",  "sgn",        "hilbert",   "riesz",
          "unimodular-power", "bessel", "sg-power", "smooth-s0",
          "sin-bessel", "x-xi",      "windowed-x-xi"};
}

PhaseDescriptor make_phase(const std::string& name, int dim,
                           std::span<const double> params) {
  if (dim != 1 && dim != 2) throw PreconditionError("phases support d = 1 or 2");
  PhaseDescriptor phase;
  phase.name = name;
  phase.dim = dim;
  if (name == "flat") {
    phase.value = [](std::span<const double> x, std::span<const double> xi) {
      double s = 0.0;
      for (std::size_t i = 0; i < xi.size(); ++i) s += x[i] * xi[i];
      return s;
    };
    phase.grad_x = [](auto, std::span<const double> xi, std::span<double> out) {
      std::copy(xi.begin(), xi.end(), out.begin());
    };
    phase.grad_xi = [](std::span<const double> x, auto, std::span<double> out) {
      std::copy(x.begin(), x.end(), out.begin());
    };
    phase.mixed_hessian = [dim](auto, auto, std::span<double> out) {
      for (int j = 0; j < dim; ++j) {
        for (int k = 0; k < dim; ++k) out[j * dim + k] = j == k ? 1.0 : 0.0;
      }
    };
    return phase;
  }
  if (dim != 1) throw PreconditionError("phase '" + name + "' is one-dimensional");
  auto sgn = [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); };
  if (name == "translation") {
    const double c = param_or(params, 0, 1.0);
    phase.value = [c](std::span<const double> x, std::span<const double> xi) {
      return x[0] * xi[0] + c * std::abs(xi[0]);
    };
    phase.grad_x = [](auto, std::span<const double> xi, std::span<double> out) {
      out[0] = xi[0];
    };
    phase.grad_xi = [c, sgn](std::span<const double> x,
                             std::span<const double> xi, std::span<double> out) {
      out[0] = x[0] + c * sgn(xi[0]);
    };
    phase.mixed_hessian = [](auto, auto, std::span<double> out) { out[0] = 1.0; };
    return phase;
  }
  if (name == "perturbed") {
    const double kappa = param_or(params, 0, 0.1);
    phase.value = [kappa](std::span<const double> x, std::span<const double> xi) {
      return x[0] * xi[0] + kappa * japanese_bracket(x) * std::abs(xi[0]);
    };
    phase.grad_x = [kappa](std::span<const double> x, std::span<const double> xi,
                           std::span<double> out) {
      out[0] = xi[0] + kappa * x[0] / japanese_bracket(x) * std::abs(xi[0]);
    };
    phase.grad_xi = [kappa, sgn](std::span<const double> x,
                                 std::span<const double> xi,
                                 std::span<double> out) {
      out[0] = x[0] + kappa * japanese_bracket(x) * sgn(xi[0]);
    };
    phase.mixed_hessian = [kappa, sgn](std::span<const double> x,
                                       std::span<const double> xi,
                                       std::span<double> out) {
      out[0] = 1.0 + kappa * x[0] / japanese_bracket(x) * sgn(xi[0]);
    };
    return phase;
  }
  throw PreconditionError("unknown phase '" + name + "'");
}

std::vector<std::string> phase_catalog() {
  return {"flat", "translation", "perturbed"};
}

}  // namespace orlicz
