/*
 * Copyright 2026 The measure-audit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>

#include <gtest/gtest.h>

#include "maudit/errors.hpp"
#include "maudit/properties.hpp"

namespace maudit {
namespace {

TEST(RateSpace, GridAndMatrix) {
  auto grid = interior_grid(20);
  EXPECT_EQ(grid.size(), 361u);
  EXPECT_EQ(grid.front().p_a, Rational(1, 20));
  EXPECT_THROW(interior_grid(1), InputError);
  ConfusionMatrix c = rate_matrix(Rational(1, 8), Rational(1, 4), Rational(1, 2));
  EXPECT_EQ(c.total(), 1);
  EXPECT_EQ(c.binary(), BinaryCounts(Rational(1, 8), Rational(1, 8), Rational(3, 8), Rational(3, 8)));
}

TEST(BaselineOrder, CorrelationDistanceIsSecondOrder) {
  auto grid = interior_grid(10);
  auto cd = baseline_order(parse_measure("cd"), 2, grid);
  EXPECT_TRUE(cd.vanishes_everywhere(2));
  EXPECT_FALSE(cd.vanishes_everywhere(1));
  EXPECT_LT(cd.max_abs(2), 1e-6L);
  auto cdp = baseline_order(parse_measure("cdprime"), 2, grid);
  EXPECT_FALSE(cdp.vanishes_everywhere(2));
  EXPECT_GT(cdp.max_abs(2), 1e-2L);
}

TEST(BaselineOrder, MatthewsIsLinearInJointRate) {
  auto grid = interior_grid(8);
  auto cc = baseline_order(parse_measure("cc"), 4, grid);
  for (int order = 2; order <= 4; ++order) EXPECT_TRUE(cc.vanishes_everywhere(order)) << order;
  EXPECT_FALSE(cc.vanishes_everywhere(1));
}

TEST(BaselineOrder, Errors) {
  std::vector<RatePoint> edge{{Rational(0), Rational(1, 2)}};
  EXPECT_THROW(baseline_order(parse_measure("cc"), 2, edge), InputError);
  auto grid = interior_grid(4);
  EXPECT_THROW(baseline_order(parse_measure("cc"), 5, grid), InputError);
}

TEST(Normalizer, DiagonalValue) {
  EXPECT_NEAR(static_cast<double>(gm_normalizer(1, 0.25L, 0.25L)), 16.0 / 3.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(gm_normalizer(-2, 0.25L, 0.75L)), 16.0 / 3.0, 1e-14);
  // r = 0 is the geometric mean, i.e. the correlation coefficient's normalizer.
  EXPECT_NEAR(static_cast<double>(gm_normalizer(0, 0.5L, 0.2L)), 1 / std::sqrt(0.25 * 0.16), 1e-14);
}

TEST(Normalizer, ConditionsHold) {
  auto grid = interior_grid(20);
  for (int r : {-2, -1, 1, 2}) {
    NormalizerReport rep = check_gm_normalizer_conditions(r, grid);
    ASSERT_EQ(rep.conditions.size(), 6u);
    EXPECT_TRUE(rep.all_hold()) << "r=" << r;
    EXPECT_GT(rep.conditions[2].worst_margin, 1e-9L);
    EXPECT_GT(rep.conditions[3].worst_margin, 1e-9L);
    EXPECT_LT(rep.max_partial_discrepancy, 1e-6L);
  }
}

TEST(Normalizer, ExactSymmetryForHarmonicAndArithmetic) {
  auto grid = interior_grid(7);
  for (int r : {-1, 1}) {
    NormalizerReport rep = check_gm_normalizer_conditions(r, grid);
    EXPECT_TRUE(rep.conditions[0].holds);
    EXPECT_EQ(rep.conditions[0].worst_margin, 0);
  }
}

TEST(Impossibility, SmallSpace) {
  AuditSpace s;
  s.n_max = 6;
  s.n_max_dist = 5;
  Budget budget;
  auto rep = corroborate_impossibility(default_measures(), s, budget);
  EXPECT_TRUE(rep.consistent);
  EXPECT_EQ(rep.rows.size(), default_measures().size());
  for (const auto& row : rep.rows) {
    EXPECT_LE(row.satisfied, 2) << row.measure;
    if (row.satisfied == 2) {
      EXPECT_TRUE(row.witness_replayed) << row.measure;
    }
  }
}

}  // namespace
}  // namespace maudit
