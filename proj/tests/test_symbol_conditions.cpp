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
#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "orlicz/errors.hpp"
#include "orlicz/symbol_conditions.hpp"
#include "orlicz/symbols.hpp"

namespace orlicz {
namespace {

constexpr double kPi = std::numbers::pi;

double entry(const MihlinResult& r, int a0, int a1 = 0) {
  for (const auto& e : r.table) {
    if (e.alpha.xi[0] == a0 && e.alpha.xi[1] == a1) return e.sup;
  }
  ADD_FAILURE() << "missing multi-index";
  return NAN;
}

std::vector<std::pair<std::string, std::vector<double>>> catalog_with_params() {
  return {{"identity", {}},        {"sgn", {}},         {"hilbert", {}},
          {"riesz", {1.0}},        {"unimodular-power", {1.5}},
          {"bessel", {-1.0}},      {"sg-power", {0.5, -1.0}},
          {"smooth-s0", {}},       {"sin-bessel", {}},  {"x-xi", {}},
          {"windowed-x-xi", {}}};
}

TEST(SymbolCatalog, DerivativeOraclesAgreeWithFiniteDifferences) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ux(-3.0, 3.0);
  std::uniform_real_distribution<double> lr(std::log(0.3), std::log(30.0));
  std::bernoulli_distribution sign;
  for (int dim : {1, 2}) {
    for (const auto& [name, params] : catalog_with_params()) {
      SymbolDescriptor a;
      try {
        a = make_symbol(name, dim, params);
      } catch (const PreconditionError&) {
        continue;  // not offered in this dimension
      }
      if (!a.derivative) continue;
      std::size_t checked = 0;
      for (int trial = 0; trial < 20; ++trial) {
        std::array<double, 2> x{ux(rng), ux(rng)};
        std::array<double, 2> xi{};
        for (int j = 0; j < dim; ++j) xi[j] = (sign(rng) ? 1 : -1) * std::exp(lr(rng));
        const std::span<const double> xs(x.data(), dim), ks(xi.data(), dim);
        for (int kx = 0; kx <= 2; ++kx) {
          for (int kxi = 0; kxi + kx <= 2; ++kxi) {
            for (const auto& ax : indices_of_order(dim, kx)) {
              for (const auto& axi : indices_of_order(dim, kxi)) {
                MultiIndex alpha;
                alpha.x = ax;
                alpha.xi = axi;
                if (a.arity == Arity::xi_only && kx > 0) continue;
                const auto exact = a.derivative(alpha, xs, ks);
                if (!exact) continue;
                const cplx fd = finite_difference(a.value, alpha, dim, xs, ks);
                ASSERT_LE(std::abs(*exact - fd), 1e-4 * std::max(std::abs(*exact), 1e-3))
                    << name << " d=" << dim << " order (" << kx << "," << kxi << ")";
                ++checked;
              }
            }
          }
        }
      }
      EXPECT_GT(checked, 0u) << name;
    }
  }
}

TEST(SymbolCatalog, UnknownNamesRejected) {
  EXPECT_THROW(make_symbol("no-such-symbol", 1, {}), PreconditionError);
  EXPECT_THROW(make_phase("no-such-phase", 1, {}), PreconditionError);
}

TEST(SymbolDescriptorBehavior, CutoffZeroesValuesAndDerivatives) {
  auto a = make_symbol("bessel", 1, std::vector<double>{1.0});
  a.support_cutoff = 2.0;
  const std::array<double, 1> x{0.0}, inside{1.5}, outside{3.0};
  EXPECT_EQ(a(x, inside), cplx(0.0));
  EXPECT_NE(a(x, outside), cplx(0.0));
  MultiIndex d1;
  d1.xi = {1, 0};
  EXPECT_EQ(a.derivative_at(d1, x, inside), cplx(0.0));
}

TEST(SymbolDescriptorBehavior, MissingDerivativeWithoutFallback) {
  SymbolDescriptor a;
  a.name = "opaque";
  a.value = [](std::span<const double>, std::span<const double> xi) { return cplx(std::sin(xi[0])); };
  a.fd_fallback = false;
  MultiIndex d1;
  d1.xi = {1, 0};
  const std::array<double, 1> x{0.0}, xi{1.0};
  EXPECT_THROW(a.derivative_at(d1, x, xi), CapabilityError);
  EXPECT_THROW(mihlin_functional(a, 1), CapabilityError);
  a.fd_fallback = true;
  EXPECT_NEAR(a.derivative_at(d1, x, xi).real(), std::cos(1.0), 1e-8);
}

// --- Mihlin -----------------------------------------------------------------

TEST(MihlinFunctional, Identity) {
  for (int dim : {1, 2}) {
    const auto r = mihlin_functional(make_symbol("identity", dim, {}), dim);
    for (const auto& e : r.table) EXPECT_NEAR(e.sup, e.alpha.order() == 0 ? 1.0 : 0.0, 1e-12);
    EXPECT_NEAR(r.max, 1.0, 1e-12);
  }
}

TEST(MihlinFunctional, Sign) {
  const auto r = mihlin_functional(make_symbol("sgn", 1, {}), 1);
  EXPECT_NEAR(entry(r, 0), 1.0, 1e-12);
  EXPECT_NEAR(entry(r, 1), 0.0, 1e-12);
}

TEST(MihlinFunctional, UnimodularPower) {
  for (double gamma : {0.5, 1.0, 2.0}) {
    const auto r = mihlin_functional(make_symbol("unimodular-power", 1, std::vector<double>{gamma}), 1);
    EXPECT_NEAR(entry(r, 0), 1.0, 1e-12);
    EXPECT_NEAR(entry(r, 1), gamma, 1e-10);
  }
}

TEST(MihlinFunctional, RieszTwoDimensions) {
  // |xi| |d_1 (xi_1 / |xi|)| = xi_2^2 / |xi|^2 has sup 1 over directions.
  const auto r = mihlin_functional(make_symbol("riesz", 2, std::vector<double>{1.0}), 2);
  EXPECT_NEAR(entry(r, 0, 0), 1.0, 1e-12);
  EXPECT_NEAR(entry(r, 1, 0), 1.0, 1e-3);
  EXPECT_TRUE(std::isfinite(r.max));
}

// --- Hormander ----------------------------------------------------------------

TEST(HormanderFunctional, UnimodularPowerHalfGammaSquaredPerRadius) {
  for (double gamma : {0.5, 1.0, 2.0}) {
    const auto a = make_symbol("unimodular-power", 1, std::vector<double>{gamma});
    const auto r = hormander_functional(a, 1);
    std::size_t seen = 0;
    for (const auto& e : r.table) {
      if (e.alpha.order() != 1) continue;
      // int_R^{2R} gamma^2 / xi^2 dxi = gamma^2 / (2R), scaled by R.
      EXPECT_NEAR(e.positive_side, gamma * gamma / 2.0, 1e-4) << "R=" << e.radius;
      EXPECT_NEAR(e.negative_side, gamma * gamma / 2.0, 1e-4) << "R=" << e.radius;
      EXPECT_NEAR(e.value, gamma * gamma, 2e-4);
      ++seen;
    }
    EXPECT_EQ(seen, dyadic_radii().size());
  }
}

TEST(HormanderFunctional, IdentityAnnulusVolume) {
  const std::array<double, 2> vol{2.0, 3.0 * kPi};
  for (int dim : {1, 2}) {
    const auto r = hormander_functional(make_symbol("identity", dim, {}), dim);
    for (const auto& e : r.table) {
      EXPECT_NEAR(e.value, e.alpha.order() == 0 ? vol[dim - 1] : 0.0, 1e-8)
          << "d=" << dim << " R=" << e.radius;
    }
  }
}

TEST(HormanderFunctional, DominatedByMihlinSquared) {
  // R^{-d+2|a|} int_{A_R} |d^a m|^2 <= R^{-d} |A_R| (Mihlin)^2.
  const std::array<double, 2> vol{2.0, 3.0 * kPi};
  for (int dim : {1, 2}) {
    for (const auto& [name, params] : catalog_with_params()) {
      SymbolDescriptor a;
      try {
        a = make_symbol(name, dim, params);
      } catch (const PreconditionError&) {
        continue;
      }
      if (a.arity != Arity::xi_only) continue;
      const auto m = mihlin_functional(a, dim);
      if (!std::isfinite(m.max)) continue;
      const std::vector<double> radii{0.25, 1.0, 4.0};
      const auto h = hormander_functional(a, dim, radii);
      EXPECT_TRUE(std::isfinite(h.max)) << name;
      EXPECT_LE(h.max, vol[dim - 1] * m.max * m.max * (1.0 + 1e-6)) << name << " d=" << dim;
    }
  }
}

// --- symbol-class seminorms -----------------------------------------------------

TEST(HormanderClassSeminorm, Examples) {
  const auto one = make_symbol("identity", 1, {});
  const auto r0 = hormander_class_seminorm(one, 0.0, 1.0, 0.0, 0);
  EXPECT_NEAR(r0.value, 1.0, 1e-12);
  EXPECT_TRUE(r0.finite);

  const auto bessel = make_symbol("bessel", 1, std::vector<double>{1.0});
  EXPECT_TRUE(hormander_class_seminorm(bessel, 1.0, 1.0, 0.0, 2).finite);
  EXPECT_FALSE(hormander_class_seminorm(bessel, 0.5, 1.0, 0.0, 2).finite);

  EXPECT_TRUE(hormander_class_seminorm(make_symbol("sin-bessel", 1, {}), -1.0, 1.0, 0.0, 2).finite);
  EXPECT_TRUE(hormander_class_seminorm(make_symbol("smooth-s0", 1, {}), 0.0, 1.0, 0.0, 2).finite);
}

TEST(HormanderClassSeminorm, RejectsInvalidParameters) {
  const auto one = make_symbol("identity", 1, {});
  EXPECT_THROW(hormander_class_seminorm(one, 0.0, 0.5, 0.7, 1), PreconditionError);
  EXPECT_THROW(hormander_class_seminorm(one, 0.0, 1.0, 1.0, 1), PreconditionError);
  EXPECT_THROW(hormander_class_seminorm(one, 0.0, 1.5, 0.0, 1), PreconditionError);
}

TEST(SgSeminorm, Examples) {
  const auto one = make_symbol("identity", 1, {});
  EXPECT_NEAR(sg_seminorm(one, 0.0, 0.0, 0).value, 1.0, 1e-12);

  const auto p = make_symbol("sg-power", 1, std::vector<double>{0.5, -1.0});
  EXPECT_TRUE(sg_seminorm(p, 0.5, -1.0, 2).finite);
  EXPECT_FALSE(sg_seminorm(p, -0.5, -1.0, 2).finite);
  EXPECT_FALSE(sg_seminorm(p, 0.5, -2.0, 2).finite);
}

TEST(SgSeminorm, IgnoresValuesBelowCutoff) {
  SymbolDescriptor a;
  a.name = "spike";
  a.arity = Arity::x_and_xi;
  a.value = [](std::span<const double>, std::span<const double> xi) {
    return cplx(std::abs(xi[0]) < 1.0 ? 1e6 : 1.0);
  };
  a.derivative = [](const MultiIndex& alpha, std::span<const double>,
                    std::span<const double>) -> std::optional<cplx> {
    return alpha.order() == 0 ? std::nullopt : std::optional<cplx>(0.0);
  };
  a.support_cutoff = 1.0;
  EXPECT_NEAR(sg_seminorm(a, 0.0, 0.0, 1).value, 1.0, 1e-12);
}

// --- phases -------------------------------------------------------------------

TEST(ValidatePhase, Flat) {
  for (int dim : {1, 2}) {
    const auto r = validate_phase(make_phase("flat", dim, {}));
    EXPECT_NEAR(r.det_lower_bound, 1.0, 1e-12);
    EXPECT_NEAR(r.homogeneity_residual, 0.0, 1e-15);
    EXPECT_NEAR(r.xi_gradient_ratio_min, 1.0, 1e-12);
    EXPECT_NEAR(r.xi_gradient_ratio_max, 1.0, 1e-12);
    EXPECT_NEAR(r.x_gradient_ratio_min, 1.0, 1e-12);
    EXPECT_NEAR(r.x_gradient_ratio_max, 1.0, 1e-12);
    EXPECT_TRUE(r.acceptable());
  }
}

TEST(ValidatePhase, Perturbed) {
  const auto r = validate_phase(make_phase("perturbed", 1, std::vector<double>{0.1}));
  EXPECT_GT(r.det_lower_bound, 0.0);
  EXPECT_LE(r.homogeneity_residual, 1e-8);
  for (double v : {r.xi_gradient_ratio_min, r.xi_gradient_ratio_max, r.x_gradient_ratio_min,
                   r.x_gradient_ratio_max}) {
    EXPECT_GE(v, 0.5);
    EXPECT_LE(v, 2.0);
  }
  EXPECT_TRUE(r.acceptable());
}

TEST(ValidatePhase, GradientOraclesAgreeWithFiniteDifferences) {
  for (const auto& name : phase_catalog()) {
    const auto p = make_phase(name, 1, {});
    for (double x : {-2.0, 0.3, 5.0}) {
      for (double xi : {-3.0, 0.7, 10.0}) {
        const std::array<double, 1> xs{x}, ks{xi};
        std::array<double, 1> gx{}, gk{}, h{};
        p.grad_x(xs, ks, gx);
        p.grad_xi(xs, ks, gk);
        p.mixed_hessian(xs, ks, h);
        const double e = 1e-6;
        auto phi = [&](double a, double b) {
          const std::array<double, 1> u{a}, v{b};
          return p.value(u, v);
        };
        EXPECT_NEAR(gx[0], (phi(x + e, xi) - phi(x - e, xi)) / (2 * e), 1e-6) << name;
        EXPECT_NEAR(gk[0], (phi(x, xi + e) - phi(x, xi - e)) / (2 * e), 1e-6) << name;
        const double f = 1e-4;
        const double mixed = (phi(x + f, xi + f) - phi(x + f, xi - f) - phi(x - f, xi + f) +
                              phi(x - f, xi - f)) /
                             (4 * f * f);
        EXPECT_NEAR(h[0], mixed, 1e-5) << name;
      }
    }
  }
}

}  // namespace
}  // namespace orlicz
