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

#include "orlicz/errors.hpp"
#include "orlicz/json_io.hpp"
#include "orlicz/thresholds.hpp"
#include "orlicz/young_calculus.hpp"

namespace orlicz {
namespace {

TEST(InterpolationWindow, Examples) {
  const auto w = interpolation_window(2.0, 2.0, 0.5);
  EXPECT_DOUBLE_EQ(w.p0, 1.5);
  EXPECT_DOUBLE_EQ(w.p1, 2.5);

  const auto c = interpolation_window(compute_exponents(make_builtin(Builtin::counterexample)), 0.1);
  EXPECT_NEAR(c.p0, 4.0 / 3.0 - 0.1, 1e-3);
  EXPECT_NEAR(c.p1, 2.1, 1e-3);

  EXPECT_THROW(interpolation_window(compute_exponents(make_builtin(Builtin::entropy))),
               NotStrictError);
  EXPECT_THROW(interpolation_window(INFINITY, 2.0), NotStrictError);
}

TEST(InterpolationWindow, ClampsIntoOpenInterval) {
  // q - margin would fall below 1 + margin / 2.
  const auto w = interpolation_window(3.0, 1.02, 0.1);
  EXPECT_GT(w.p0, 1.0);
  EXPECT_LT(w.p0, 1.02);
}

TEST(InterpolationWindow, StrictInequalitiesAlwaysHold) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> uq(1.0 + 1e-5, 4.0), extra(0.0, 3.0), um(1e-4, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double q = uq(rng), p = q + extra(rng), m = um(rng);
    const auto w = interpolation_window(p, q, m);
    ASSERT_GT(w.p0, 1.0);
    ASSERT_LT(w.p0, q);
    ASSERT_GT(w.p1, p);
  }
}

TEST(FioThreshold, Examples) {
  EXPECT_EQ(fio_threshold(2, 2.0, 2.0), 0.0);
  EXPECT_EQ(fio_threshold(3, 2.0, 4.0 / 3.0), -0.5);
  for (double q : {1.1, 4.0 / 3.0, 2.0}) EXPECT_EQ(fio_threshold(1, 3.0, q), 0.0);
  EXPECT_THROW(fio_threshold(2, 2.0, 1.0), NotStrictError);
}

TEST(FioThreshold, FromReport) {
  const auto r = compute_exponents(make_builtin(Builtin::counterexample));
  EXPECT_NEAR(fio_threshold(3, r), -0.5, 1e-3);
}

TEST(FioThreshold, MonotoneInDimension) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> uq(1.01, 5.0), extra(0.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const double q = uq(rng), p = q + extra(rng);
    double prev = fio_threshold(1, p, q);
    for (int d = 2; d <= 6; ++d) {
      const double t = fio_threshold(d, p, q);
      ASSERT_LE(t, prev);
      ASSERT_LE(t, 0.0);
      prev = t;
    }
  }
}

TEST(FioThreshold, DependsOnlyOnDeviations) {
  // q and its Holder conjugate give the same |1/q - 1/2|.
  for (double q : {1.25, 1.5, 1.9}) {
    const double conj = q / (q - 1.0);
    EXPECT_NEAR(fio_threshold(3, 6.0, q), fio_threshold(3, 6.0, std::min(conj, 6.0)), 1e-15);
  }
  EXPECT_NEAR(fio_threshold(3, 4.0, 4.0 / 3.0), fio_threshold(3, 4.0, 4.0), 1e-15);
}

TEST(CheckFioOrders, StrictBoundary) {
  EXPECT_TRUE(check_fio_orders(-1.0, -1.0, 3, 2.0, 4.0 / 3.0));
  EXPECT_FALSE(check_fio_orders(-0.5, -1.0, 3, 2.0, 4.0 / 3.0));
  EXPECT_FALSE(check_fio_orders(-1.0, -0.5, 3, 2.0, 4.0 / 3.0));
  EXPECT_TRUE(check_fio_orders(-0.1, -0.1, 1, 2.0, 4.0 / 3.0));
  EXPECT_FALSE(check_fio_orders(0.0, 0.0, 1, 2.0, 4.0 / 3.0));
  EXPECT_TRUE(check_fio_orders(-0.01, -0.01, 1, 2.0, 4.0 / 3.0));
}

TEST(CheckLpFioOrders, NonStrictBoundary) {
  EXPECT_TRUE(check_lp_fio_orders(0.0, 0.0, 2, 2.0));
  EXPECT_TRUE(check_lp_fio_orders(0.0, 0.0, 5, 2.0));
  EXPECT_TRUE(check_lp_fio_orders(-0.5, -0.5, 3, 4.0));
  EXPECT_FALSE(check_lp_fio_orders(-0.4, -0.5, 3, 4.0));
  EXPECT_FALSE(check_lp_fio_orders(-0.5, -0.4, 3, 4.0));
  EXPECT_THROW(check_lp_fio_orders(0.0, 0.0, 3, 1.0), PreconditionError);
  EXPECT_THROW(check_lp_fio_orders(0.0, 0.0, 3, INFINITY), PreconditionError);
}

TEST(SelectLpExponents, StrictOrdersGiveWindow) {
  std::mt19937_64 rng(57);
  std::uniform_real_distribution<double> uq(1.05, 3.0), extra(0.0, 3.0), slack(1e-6, 0.5);
  for (int i = 0; i < 2000; ++i) {
    const double q = uq(rng), p = q + extra(rng);
    for (int d : {1, 2, 3, 4}) {
      const double t = fio_threshold(d, p, q);
      const double m = t - slack(rng), mu = t - slack(rng);
      ASSERT_TRUE(check_fio_orders(m, mu, d, p, q));
      const auto w = select_lp_exponents(m, mu, d, p, q);
      ASSERT_TRUE(w.has_value());
      ASSERT_GT(w->p0, 1.0);
      ASSERT_LT(w->p0, q);
      ASSERT_GT(w->p1, p);
      ASSERT_TRUE(check_lp_fio_orders(m, mu, d, w->p0));
      ASSERT_TRUE(check_lp_fio_orders(m, mu, d, w->p1));
    }
  }
}

TEST(SelectLpExponents, NoneAtTheBoundary) {
  EXPECT_FALSE(select_lp_exponents(-0.5, -0.5, 3, 2.0, 4.0 / 3.0).has_value());
}

TEST(ThresholdReport, Fields) {
  const auto r = compute_exponents(make_builtin(Builtin::power, std::vector<double>{2.0}));
  const auto t = make_threshold_report(2, r);
  EXPECT_EQ(t.dim, 2);
  EXPECT_TRUE(t.admissible);
  EXPECT_NEAR(t.threshold, 0.0, 1e-15);
  EXPECT_LT(t.window.p0, t.q_phi);
  EXPECT_GT(t.window.p1, t.p_phi);
  const auto j = to_json(t);
  EXPECT_EQ(j.at("d").get<int>(), 2);
  EXPECT_TRUE(j.at("admissible").get<bool>());
}

}  // namespace
}  // namespace orlicz
