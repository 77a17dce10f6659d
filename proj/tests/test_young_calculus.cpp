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

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/json_io.hpp"
#include "orlicz/young_calculus.hpp"
#include "orlicz/young_function.hpp"

namespace orlicz {
namespace {

YoungFunction power(double p) { return make_builtin(Builtin::power, std::vector<double>{p}); }
YoungFunction counterexample() { return make_builtin(Builtin::counterexample); }
YoungFunction entropy() { return make_builtin(Builtin::entropy); }

std::vector<YoungFunction> library() {
  return {power(1.0),
          power(1.5),
          power(2.0),
          power(3.0),
          make_builtin(Builtin::affine, std::vector<double>{2.0}),
          entropy(),
          counterexample(),
          make_builtin(Builtin::exp_minus_one)};
}

// Brute-force sup/inf of t Phi'(t)/Phi(t) by central differences on a
// dense log grid, independent of the analytic elasticities.
std::pair<double, double> fd_elasticity_range(const YoungFunction& phi, double lo,
                                              double hi, std::size_t n) {
  double sup = 0.0, inf = INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = lo * std::pow(hi / lo, (i + 0.5) / static_cast<double>(n));
    const double h = t * 1e-6;
    const double d = (phi(t + h) - phi(t - h)) / (2.0 * h);
    const double e = t * d / phi(t);
    sup = std::max(sup, e);
    inf = std::min(inf, e);
  }
  return {sup, inf};
}

TEST(MakeBuiltin, CounterexamplePieces) {
  const auto phi = counterexample();
  ASSERT_EQ(phi.pieces().size(), 3u);
  EXPECT_EQ(phi.pieces()[0].start, 0.0);
  EXPECT_EQ(phi.pieces()[1].start, 1.0);
  EXPECT_EQ(phi.pieces()[2].start, 2.0);
  for (double t : {0.25, 0.5, 0.9}) EXPECT_DOUBLE_EQ(phi(t), 2.0 * t * t);
  for (double t : {1.0, 1.3, 1.9}) EXPECT_DOUBLE_EQ(phi(t), 4.0 * t - 2.0);
  for (double t : {2.5, 10.0, 1e3}) EXPECT_DOUBLE_EQ(phi(t), t * t + 2.0);
}

TEST(MakeBuiltin, LinearPower) {
  const auto phi = power(1.0);
  for (double t : {1e-3, 1.0, 7.5}) {
    EXPECT_DOUBLE_EQ(phi(t), t);
    EXPECT_DOUBLE_EQ(one_sided_derivative(phi, t, Side::right), 1.0);
  }
  EXPECT_TRUE(phi.is_linear());
}

TEST(MakeBuiltin, EntropyAtTwo) { EXPECT_DOUBLE_EQ(entropy()(2.0), 2.0 * std::log(3.0)); }

TEST(MakeBuiltin, RejectsConcavePower) {
  EXPECT_THROW(power(0.5), PreconditionError);
}

TEST(Eval, Examples) {
  EXPECT_DOUBLE_EQ(eval(counterexample(), 2.0), 6.0);
  EXPECT_DOUBLE_EQ(eval(power(2.0), 3.0), 9.0);
  for (const auto& phi : library()) EXPECT_EQ(eval(phi, 0.0), 0.0);
  EXPECT_THROW(eval(power(2.0), -1.0), DomainError);
}

TEST(Eval, InfiniteBeyondFiniteness) {
  Piece p;
  p.terms.push_back(Term{TermForm::power, 1.0, 2.0});
  const auto phi = YoungFunction::piecewise({p}, "capped", {}, 3.0);
  EXPECT_FALSE(phi.finite_everywhere());
  EXPECT_DOUBLE_EQ(phi(2.0), 4.0);
  EXPECT_TRUE(std::isinf(phi(3.5)));
  EXPECT_THROW(compute_exponents(phi), PreconditionError);
}

TEST(OneSidedDerivative, CounterexampleBreakpoints) {
  const auto phi = counterexample();
  EXPECT_DOUBLE_EQ(one_sided_derivative(phi, 1.0, Side::right), 4.0);
  EXPECT_DOUBLE_EQ(one_sided_derivative(phi, 1.0, Side::left), 4.0);
  EXPECT_DOUBLE_EQ(one_sided_derivative(phi, 2.0, Side::left), 4.0);
  EXPECT_DOUBLE_EQ(one_sided_derivative(phi, 2.0, Side::right), 4.0);
}

TEST(OneSidedDerivative, KinkedFunction) {
  Piece a{0.0, {Term{TermForm::power, 1.0, 1.0}}};
  Piece b{1.0, {Term{TermForm::affine, 3.0, 2.0}}};
  const auto phi = YoungFunction::piecewise({a, b});
  EXPECT_DOUBLE_EQ(one_sided_derivative(phi, 1.0, Side::left), 1.0);
  EXPECT_DOUBLE_EQ(one_sided_derivative(phi, 1.0, Side::right), 3.0);
}

TEST(OneSidedDerivative, PowerMatchesFormula) {
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    for (double t : {0.1, 1.0, 4.0}) {
      for (Side s : {Side::left, Side::right}) {
        EXPECT_NEAR(one_sided_derivative(power(p), t, s), p * std::pow(t, p - 1.0), 1e-12);
      }
    }
  }
}

TEST(OneSidedDerivative, LeftAndRightAgreeOffBreakpoints) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> logt(-5.0, 2.5);
  for (const auto& phi : library()) {
    for (int i = 0; i < 200; ++i) {
      const double t = std::pow(10.0, logt(rng));
      if (t == 1.0 || t == 2.0) continue;
      const double l = one_sided_derivative(phi, t, Side::left);
      const double r = one_sided_derivative(phi, t, Side::right);
      EXPECT_NEAR(l, r, 1e-12 * std::max(1.0, std::abs(r))) << phi.kind() << " t=" << t;
    }
  }
}

TEST(ComputeExponents, Counterexample) {
  const auto r = compute_exponents(counterexample());
  EXPECT_NEAR(r.q_phi, 4.0 / 3.0, 1e-3);
  EXPECT_NEAR(r.p_phi, 2.0, 1e-3);
  EXPECT_TRUE(r.strict());
}

TEST(ComputeExponents, CounterexampleAgainstFiniteDifferences) {
  const auto [sup, inf] = fd_elasticity_range(counterexample(), 1e-6, 1e6, 1000000);
  const auto r = compute_exponents(counterexample());
  EXPECT_NEAR(r.p_phi, sup, 1e-3);
  EXPECT_NEAR(r.q_phi, inf, 1e-3);
}

TEST(ComputeExponents, EntropyLowerExponentIsOne) {
  const auto r = compute_exponents(entropy());
  EXPECT_NEAR(r.q_phi, 1.0, 1e-3);
  EXPECT_FALSE(r.strict());
}

TEST(ComputeExponents, PowerExact) {
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const auto r = compute_exponents(power(p));
    EXPECT_DOUBLE_EQ(r.p_phi, p);
    EXPECT_DOUBLE_EQ(r.q_phi, p);
  }
}

TEST(ComputeExponents, ExpDiverges) {
  const auto r = compute_exponents(make_builtin(Builtin::exp_minus_one));
  EXPECT_TRUE(std::isinf(r.p_phi) || r.p_phi >= kExponentDivergence);
}

TEST(ComputeExponents, ZeroAtPositiveArgumentIsDegenerate) {
  Piece zero{0.0, {Term{TermForm::power, 0.0, 1.0}}};
  Piece rise{1.0, {Term{TermForm::affine, 1.0, 1.0}}};
  const auto phi = YoungFunction::piecewise({zero, rise});
  EXPECT_THROW(compute_exponents(phi), DegenerateFunctionError);
}

TEST(GridConfigValidation, RejectsBadRanges) {
  GridConfig cfg;
  cfg.t_min = 2.0;
  cfg.t_max = 1.0;
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg = GridConfig{};
  cfg.n_points = 1;
  EXPECT_THROW(cfg.validate(), PreconditionError);
}

TEST(CheckDelta2, Examples) {
  for (double p : {1.0, 2.0, 3.0}) {
    const auto r = check_delta2(power(p));
    EXPECT_TRUE(r.satisfied);
    EXPECT_NEAR(r.constant, std::pow(2.0, p), 1e-9 * std::pow(2.0, p));
  }
  EXPECT_FALSE(check_delta2(make_builtin(Builtin::exp_minus_one)).satisfied);
  const auto c = check_delta2(counterexample());
  EXPECT_TRUE(c.satisfied);
  EXPECT_LE(c.constant, 4.0 + 1e-9);
}

TEST(CheckLambda, Examples) {
  const GridConfig cfg;
  const auto sq = check_lambda(power(2.0), cfg, 2.0);
  EXPECT_TRUE(sq.satisfied);
  EXPECT_NEAR(sq.worst_ratio, 1.0, 1e-12);
  EXPECT_TRUE(check_lambda(counterexample(), cfg, 4.0 / 3.0).satisfied);
  EXPECT_FALSE(check_lambda(entropy(), cfg, 1.1).satisfied);
  EXPECT_FALSE(check_lambda(power(2.0), cfg, 1.0).satisfied);
}

TEST(CheckSqueezing, Examples) {
  const auto sq = check_squeezing(power(2.0), compute_exponents(power(2.0)), 1.0, 1.0);
  EXPECT_NEAR(sq.c_low_small, 1.0, 1e-12);
  EXPECT_NEAR(sq.c_up_small, 1.0, 1e-12);
  EXPECT_NEAR(sq.c_low_large, 1.0, 1e-12);
  EXPECT_NEAR(sq.c_up_large, 1.0, 1e-12);

  const auto ce = counterexample();
  const auto c = check_squeezing(ce, compute_exponents(ce), 1.0, 2.0);
  for (double v : {c.c_low_small, c.c_up_small, c.c_low_large, c.c_up_large}) {
    EXPECT_GT(v, 0.0);
    EXPECT_TRUE(std::isfinite(v));
  }
  // Brute-force constants: min/max of Phi(t)/t^e over a dense sample.
  double lo_small = INFINITY;
  for (int i = 0; i < 20000; ++i) {
    const double t = 1e-6 * std::pow(1e6, i / 19999.0);
    lo_small = std::min(lo_small, ce(t) / std::pow(t, 2.0));
  }
  EXPECT_NEAR(c.c_low_small, lo_small, 1e-6);

  const auto en = entropy();
  const auto e = check_squeezing(en, compute_exponents(en), 1.0, 1.0);
  EXPECT_LE(e.c_up_small, std::log(2.0) + 1e-12);
}

TEST(CheckSqueezing, InconsistentExponentsRejected) {
  const auto phi = power(2.0);
  ExponentReport wrong = compute_exponents(phi);
  wrong.q_phi = 3.0;
  EXPECT_THROW(check_squeezing(phi, wrong, 1.0, 1.0), SqueezingViolationError);
}

TEST(CheckEquivalence, Examples) {
  const auto phi = counterexample();
  const auto self = check_equivalence(phi, phi);
  EXPECT_TRUE(self.equivalent);
  EXPECT_DOUBLE_EQ(self.constant, 1.0);
  const auto scaled =
      check_equivalence(power(2.0), make_builtin(Builtin::power, std::vector<double>{2.0, 3.0}));
  EXPECT_TRUE(scaled.equivalent);
  EXPECT_NEAR(scaled.constant, 3.0, 1e-12);
  EXPECT_FALSE(check_equivalence(power(2.0), power(3.0)).equivalent);
}

TEST(SmoothEquivalent, LinearClosedForm) {
  const auto psi = smooth_equivalent(power(1.0), 64);
  const double m1 = mollifier_first_moment(64);
  EXPECT_NEAR(m1, 0.5, 1e-14);
  for (double t : {1e-3, 0.5, 1.0, 40.0}) {
    EXPECT_NEAR(psi(t), t * (1.0 - 0.5 * m1), 1e-14 * t);
    EXPECT_LE(psi(t), t);
  }
  EXPECT_NEAR(one_sided_derivative(psi, 1e-6, Side::right), 0.75, 1e-6);
}

TEST(SmoothEquivalent, DominatedAndEquivalent) {
  for (const auto& phi : {power(2.0), counterexample()}) {
    const auto psi = smooth_equivalent(phi, 64);
    EXPECT_EQ(psi(0.0), 0.0);
    for (int i = 0; i < 10000; ++i) {
      const double t = 1e-3 * std::pow(1e6, i / 9999.0);
      ASSERT_LE(psi(t), phi(t) * (1.0 + 1e-12));
    }
    const auto eq = check_equivalence(psi, phi);
    EXPECT_TRUE(eq.equivalent);
    EXPECT_LE(eq.constant, 4.0);
  }
}

TEST(SmoothEquivalent, MatchesAdaptiveQuadrature) {
  // Psi(t) = int_0^1 Phi(t - s t / 2) bump(s) ds / int bump, computed by
  // Gauss-Kronrod against the library's fixed midpoint rule.
  const auto phi = counterexample();
  const auto psi = smooth_equivalent(phi, 256);
  auto bump = [](double s) {
    const double u = 2.0 * s - 1.0;
    return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
  };
  const double mass = testing::gk_integrate(bump, 0.0, 1.0);
  for (double t : {0.3, 1.5, 2.5, 3.9, 10.0}) {
    const double ref =
        testing::gk_integrate([&](double s) { return phi(t - 0.5 * s * t) * bump(s); }, 0.0,
                              1.0) /
        mass;
    EXPECT_NEAR(psi(t), ref, 1e-6 * ref) << "t=" << t;
  }
}

TEST(SmoothEquivalent, RequiresDelta2) {
  EXPECT_THROW(smooth_equivalent(make_builtin(Builtin::exp_minus_one), 32), PreconditionError);
}

TEST(StrictlyConvexEquivalent, LinearClosedForm) {
  const auto psi = YoungFunction::exp_convolution_only(power(1.0), 32);
  for (double t : {0.0, 1e-3, 0.5, 1.0, 5.0, 30.0}) {
    EXPECT_NEAR(psi(t), t - 1.0 + std::exp(-t), 1e-8);
  }
}

TEST(StrictlyConvexEquivalent, Counterexample) {
  const auto phi = counterexample();
  const auto phi1 = strictly_convex_equivalent(phi, 32);
  EXPECT_EQ(phi1(0.0), 0.0);
  const auto psi = YoungFunction::exp_convolution_only(phi, 32);
  for (int i = 0; i < 10000; ++i) {
    const double t = 1e-3 * std::pow(1e6, i / 9999.0);
    ASSERT_LE(psi(t), phi(t) * (1.0 + 1e-12));
  }
  const auto eq = check_equivalence(phi1, phi);
  EXPECT_TRUE(eq.equivalent);
  EXPECT_LE(eq.constant, 2.0);
  EXPECT_GT(min_second_difference(phi1, 1e-3, 10.0, 2000), 0.0);
}

TEST(StrictlyConvexEquivalent, MatchesAdaptiveQuadrature) {
  const auto phi = counterexample();
  const auto psi = YoungFunction::exp_convolution_only(phi, 32);
  for (double t : {0.5, 1.5, 3.0, 12.0}) {
    double ref = 0.0;
    // Split at the kinks of s -> Phi(t - s) (s = t - 1, t - 2).
    std::vector<double> cuts{0.0};
    for (double b : {t - 2.0, t - 1.0}) {
      if (b > 0.0) cuts.push_back(b);
    }
    cuts.push_back(t);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      ref += testing::gk_integrate(
          [&](double s) { return phi(t - s) * std::exp(-s); }, cuts[i], cuts[i + 1]);
    }
    EXPECT_NEAR(psi(t), ref, 1e-9 * std::max(1.0, ref)) << "t=" << t;
  }
}

TEST(StrictlyConvexEquivalent, RequiresLowerExponentAboveOne) {
  EXPECT_THROW(strictly_convex_equivalent(entropy(), 32), PreconditionError);
}

TEST(MinSecondDifference, EntropyStrictlyConvex) {
  EXPECT_GT(min_second_difference(entropy(), 1e-3, 10.0, 1000), 0.0);
  EXPECT_NEAR(min_second_difference(power(1.0), 0.1, 10.0, 100), 0.0, 1e-12);
}

// --- library-wide properties ----------------------------------------------

TEST(LibraryProperties, StructureOfBuiltinsAndConstructions) {
  GridConfig cfg;
  cfg.n_points = 2000;
  std::vector<YoungFunction> all = library();
  all.push_back(smooth_equivalent(counterexample(), 32));
  all.push_back(strictly_convex_equivalent(counterexample(), 16));
  for (const auto& phi : all) {
    const auto s = check_structure(phi, cfg, 10000, 42);
    EXPECT_TRUE(s.ok()) << phi.kind() << " mono=" << s.monotonicity_violations
                        << " conv=" << s.convexity_violations
                        << " deriv=" << s.derivative_order_violations;
  }
}

TEST(LibraryProperties, ExponentOrdering) {
  for (const auto& phi : library()) {
    const auto r = compute_exponents(phi);
    EXPECT_GE(r.q_phi, 1.0 - 1e-12) << phi.kind();
    EXPECT_LE(r.q_phi, r.p_phi + 1e-12) << phi.kind();
  }
}

TEST(LibraryProperties, UpperExponentOneOnlyForLinear) {
  for (const auto& phi : library()) {
    const auto r = compute_exponents(phi);
    EXPECT_EQ(std::abs(r.p_phi - 1.0) < 1e-12, phi.is_linear()) << phi.kind();
  }
}

TEST(LibraryProperties, Delta2MatchesFiniteUpperExponent) {
  for (const auto& phi : library()) {
    const auto r = compute_exponents(phi);
    const bool finite = std::isfinite(r.p_phi) && r.p_phi < kExponentDivergence;
    EXPECT_EQ(check_delta2(phi).satisfied, finite) << phi.kind();
  }
}

TEST(LibraryProperties, LambdaMatchesLowerExponentAboveOne) {
  for (const auto& phi : library()) {
    const auto r = compute_exponents(phi);
    EXPECT_EQ(check_lambda(phi, GridConfig{}, r.q_phi - 0.01).satisfied, r.q_phi > 1.0 + 1e-6)
        << phi.kind();
  }
}

TEST(LibraryProperties, RatioToLowerPowerIsMonotone) {
  for (const auto& phi : library()) {
    const auto r = compute_exponents(phi);
    if (!(r.q_phi > 1.0 + 1e-6)) continue;
    for (double p : {1.0 + 0.5 * (r.q_phi - 1.0), r.q_phi}) {
      double prev = 0.0;
      for (int i = 0; i < 5000; ++i) {
        const double t = 1e-4 * std::pow(1e8, i / 4999.0);
        const double ratio = phi(t) / std::pow(t, p);
        ASSERT_GE(ratio, prev * (1.0 - 1e-12)) << phi.kind() << " p=" << p << " t=" << t;
        prev = ratio;
      }
    }
  }
}

TEST(JsonRoundTrip, Builtins) {
  for (const auto& phi : library()) {
    const auto back = young_function_from_json(to_json(phi));
    for (double t : {0.1, 1.0, 1.5, 3.0, 20.0}) EXPECT_DOUBLE_EQ(back(t), phi(t));
  }
}

TEST(JsonRoundTrip, PiecewiseDescriptor) {
  const nlohmann::json j = {
      {"kind", "piecewise"},
      {"pieces",
       {{{"start", 0.0}, {"terms", {{{"form", "power"}, {"coeff", 2.0}, {"param", 2.0}}}}},
        {{"start", 1.0}, {"terms", {{{"form", "affine"}, {"coeff", 4.0}, {"param", 2.0}}}}},
        {{"start", 2.0},
         {"terms",
          {{{"form", "power"}, {"coeff", 1.0}, {"param", 2.0}},
           {{"form", "power"}, {"coeff", 2.0}, {"param", 0.0}}}}}}}};
  const auto phi = young_function_from_json(j);
  const auto ref = counterexample();
  for (double t : {0.5, 1.5, 2.0, 7.0}) EXPECT_DOUBLE_EQ(phi(t), ref(t));
  EXPECT_THROW(young_function_from_json(nlohmann::json{{"kind", "nope"}}), FormatError);
}

}  // namespace
}  // namespace orlicz
