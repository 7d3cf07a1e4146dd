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

#include <gtest/gtest.h>

#include "maudit/confusion.hpp"
#include "maudit/enumerate.hpp"
#include "maudit/errors.hpp"
#include "maudit/labeling.hpp"
#include "maudit/value.hpp"
#include "test_util.hpp"

namespace maudit {
namespace {

using testing::M;
using testing::Q;

LabelingSpace space(int n, int m, std::optional<std::vector<std::int64_t>> sizes = std::nullopt) {
  LabelingSpace s;
  s.n = n;
  s.m = m;
  s.class_sizes = std::move(sizes);
  return s;
}

TEST(Rational, ParseAndRender) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(to_string(Rational(-7, 10)), "-7/10");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
}

TEST(Rational, RootsAndCombinatorics) {
  EXPECT_EQ(exact_root(Rational(9, 4), 2), Rational(3, 2));
  EXPECT_FALSE(exact_root(Rational(2), 2).has_value());
  EXPECT_EQ(binomial(10, 4), 210);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Value, AlgebraicCanonicalForm) {
  // 10 / sqrt(600) reduces to (1/6)^(1/2) * 1.
  Value v = Value::algebraic(10, Rational(1, 600), 2);
  EXPECT_TRUE(v.is_exact());
  EXPECT_FALSE(v.is_rational());
  EXPECT_NEAR(static_cast<double>(v.approx()), 0.408248290463863, 1e-14);
  EXPECT_TRUE(Value::algebraic(3, 4, 2).is_rational());
  EXPECT_EQ(Value::algebraic(3, 4, 2).rational(), 6);
}

TEST(Value, CompareExactAndReal) {
  EXPECT_EQ(compare(Q(1, 3), Q(1, 3)), Relation::Equal);
  EXPECT_EQ(compare(Q(1, 3), Q(1, 2)), Relation::Less);
  // Exact comparison must not collapse values closer than epsilon.
  EXPECT_EQ(compare(Q(1), Value::exact(Rational(1) + Rational(1, mpz_class("1000000000000000000")))),
            Relation::Less);
  EXPECT_EQ(compare(Value::real(0.5L), Value::real(0.5L + 1e-14L)), Relation::Equal);
  EXPECT_EQ(compare(Value::algebraic(2, 2, 2), Value::algebraic(1, 8, 2)), Relation::Equal);
  EXPECT_EQ(compare(Value::algebraic(1, 3, 2), Value::algebraic(1, 2, 2)), Relation::Greater);
}

TEST(Value, SumsOfLikeRadicals) {
  Value s = Value::algebraic(1, 2, 2) + Value::algebraic(3, 2, 2);
  EXPECT_TRUE(s.is_exact());
  EXPECT_EQ(s.exact_string(), Value::algebraic(4, 2, 2).exact_string());
  EXPECT_EQ((Q(1, 2) + Q(1, 3)).rational(), Rational(5, 6));
}

TEST(Labeling, RejectsBadLabels) {
  EXPECT_THROW(Labeling({0, 2}, 2), InputError);
  EXPECT_THROW(Labeling({-1}, 2), InputError);
  EXPECT_THROW(Labeling({}, 2), InputError);
  Labeling l({0, 2, 2, 1}, 3);
  EXPECT_EQ(l.class_sizes(), (std::vector<std::int64_t>{1, 1, 2}));
}

TEST(BuildConfusion, SmallExamples) {
  EXPECT_EQ(build_confusion(Labeling({1, 1, 0}, 2), Labeling({1, 1, 1}, 2)), M({{0, 1}, {0, 2}}));
  EXPECT_EQ(build_confusion(Labeling({0, 1, 2}, 3), Labeling({0, 1, 2}, 3)),
            M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(BuildConfusion, TableNineTripletThree) {
  Labeling a({0, 0, 0, 0, 1, 1, 1, 0, 1, 0}, 2);
  Labeling b({1, 1, 1, 1, 1, 1, 1, 1, 0, 1}, 2);
  BinaryCounts bc = build_confusion(a, b).binary();
  EXPECT_EQ(bc, BinaryCounts(3, 1, 6, 0));
}

TEST(BuildConfusion, Mismatch) {
  EXPECT_THROW(build_confusion(Labeling({0, 1}, 2), Labeling({0}, 2)), InputError);
  EXPECT_THROW(build_confusion(Labeling({0, 1}, 2), Labeling({0, 1}, 3)), InputError);
}

TEST(ConfusionMatrix, Margins) {
  ConfusionMatrix c = M({{3, 2, 0}, {1, 4, 1}, {0, 2, 5}});
  EXPECT_EQ(c.total(), 18);
  EXPECT_EQ(c.row_sums(), (std::vector<Rational>{5, 6, 7}));
  EXPECT_EQ(c.col_sums(), (std::vector<Rational>{4, 8, 6}));
  EXPECT_EQ(c.trace(), 12);
  EXPECT_TRUE(c.full_support());
  EXPECT_FALSE(c.true_unary());
  EXPECT_THROW(ConfusionMatrix::from_rows({{1, -1}, {0, 1}}), InputError);
  EXPECT_THROW(ConfusionMatrix::from_rows({{1, 0}, {0}}), InputError);
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(M({{3, 2}, {1, 4}})), M({{3, 1}, {2, 4}}));
  ConfusionMatrix d = M({{2, 0}, {0, 5}});
  EXPECT_EQ(transpose(d), d);
  ConfusionMatrix c = M({{0, 1, 0}, {0, 0, 1}, {2, 0, 0}});
  EXPECT_EQ(transpose(transpose(c)), c);
}

TEST(PermuteClasses, Identity) {
  ConfusionMatrix c = M({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  std::vector<int> id{0, 1, 2};
  EXPECT_EQ(permute_classes(c, id), c);
}

TEST(PermuteClasses, BinarySwapFlipsLabels) {
  ConfusionMatrix c(BinaryCounts(3, 2, 1, 4));
  std::vector<int> swap{1, 0};
  EXPECT_EQ(permute_classes(c, swap).binary(), BinaryCounts(4, 1, 2, 3));
}

TEST(PermuteClasses, ThreeCycle) {
  ConfusionMatrix c = M({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  std::vector<int> cyc{1, 2, 0};
  ConfusionMatrix p = permute_classes(c, cyc);
  // entry (i, j) is c(perm[i], perm[j])
  EXPECT_EQ(p, M({{5, 6, 4}, {8, 9, 7}, {2, 3, 1}}));
  std::vector<int> sq{2, 0, 1};
  EXPECT_EQ(permute_classes(p, cyc), permute_classes(c, sq));
  std::vector<int> bad{0, 0, 1};
  EXPECT_THROW(permute_classes(c, bad), InputError);
}

TEST(OneVsAll, Examples) {
  ConfusionMatrix c = M({{0, 1, 0}, {0, 0, 1}, {2, 0, 0}});
  // n = 4 here, so one true negative remains: (c00, a0 - c00, b0 - c00, n - a0 - b0 + c00).
  EXPECT_EQ(one_vs_all(c, 0), BinaryCounts(0, 1, 2, 1));
  ConfusionMatrix d = M({{2, 0, 0}, {0, 1, 0}, {0, 0, 3}});
  for (int i = 0; i < 3; ++i) {
    BinaryCounts bc = one_vs_all(d, i);
    EXPECT_EQ(bc.c10, 0);
    EXPECT_EQ(bc.c01, 0);
  }
  // operands c_ii, a_i - c_ii, b_i - c_ii, n - a_i - b_i + c_ii
  ConfusionMatrix e = M({{3, 2, 0}, {1, 4, 1}, {0, 2, 5}});
  EXPECT_EQ(one_vs_all(e, 1), BinaryCounts(4, 2, 4, 8));
}

TEST(ExpectedMatrix, Examples) {
  std::vector<std::int64_t> a{5, 5}, b{4, 6};
  EXPECT_EQ(expected_matrix(a, b), M({{2, 3}, {2, 3}}));
  std::vector<std::int64_t> u{7, 0};
  EXPECT_EQ(expected_matrix(u, u), M({{7, 0}, {0, 0}}));
  std::vector<std::int64_t> a2{2, 1}, b2{1, 2};
  ConfusionMatrix e = expected_matrix(a2, b2);
  EXPECT_EQ(e(0, 0), Rational(2, 3));
  EXPECT_EQ(e(0, 1), Rational(4, 3));
  EXPECT_EQ(e(1, 0), Rational(1, 3));
  EXPECT_EQ(e(1, 1), Rational(2, 3));
  std::vector<std::int64_t> bad{1, 1};
  EXPECT_THROW(expected_matrix(a2, bad), InputError);
}

TEST(Enumerate, LabelingCounts) {
  Budget budget;
  LabelingSpace fixed = space(3, 2, std::vector<std::int64_t>{2, 1});
  EXPECT_EQ(enumerate_labelings(fixed, budget).size(), 3u);
  LabelingSpace free = space(2, 2);
  EXPECT_EQ(enumerate_labelings(free, budget).size(), 4u);
  LabelingSpace both = space(10, 2);
  both.require_all_classes = true;
  EXPECT_EQ(labeling_count(both), 1022);
  EXPECT_EQ(enumerate_labelings(both, budget).size(), 1022u);
  LabelingSpace three = space(4, 3);
  three.require_all_classes = true;
  EXPECT_EQ(labeling_count(three), 36);
  EXPECT_EQ(enumerate_labelings(three, budget).size(), 36u);
  three.leading_label = 1;
  EXPECT_EQ(labeling_count(three), 12);
  EXPECT_EQ(enumerate_labelings(three, budget).size(), 12u);
}

TEST(Enumerate, LexicographicOrder) {
  Budget budget;
  auto ls = enumerate_labelings(space(2, 2), budget);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], Labeling({0, 0}, 2));
  EXPECT_EQ(ls[1], Labeling({0, 1}, 2));
  EXPECT_EQ(ls[3], Labeling({1, 1}, 2));
}

TEST(Enumerate, ConfusionMatricesWithMultiplicity) {
  Budget budget;
  std::vector<std::int64_t> a{1, 1}, b{1, 1};
  auto all = enumerate_confusion_matrices(a, b, budget);
  ASSERT_EQ(all.size(), 2u);
  for (const auto& w : all) EXPECT_EQ(w.multiplicity, 1);

  std::vector<std::int64_t> a2{2, 0};
  auto one = enumerate_confusion_matrices(a2, b, budget);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].matrix, M({{1, 1}, {0, 0}}));
  EXPECT_EQ(one[0].multiplicity, 2);

  std::vector<std::int64_t> a3{5, 5}, b3{4, 6};
  Integer total = 0;
  for (const auto& w : enumerate_confusion_matrices(a3, b3, budget)) total += w.multiplicity;
  EXPECT_EQ(total, 210);
  EXPECT_EQ(total, multinomial(b3));
  LabelingSpace fixed = space(10, 2, b3);
  EXPECT_EQ(labeling_count(fixed), 210);
}

TEST(Enumerate, MultiplicitiesSumToMultinomial) {
  Budget budget;
  std::vector<std::int64_t> a{2, 3, 1}, b{1, 2, 3};
  Integer total = 0;
  for (const auto& w : enumerate_confusion_matrices(a, b, budget)) {
    EXPECT_EQ(w.matrix.row_sums(), (std::vector<Rational>{2, 3, 1}));
    EXPECT_EQ(w.matrix.col_sums(), (std::vector<Rational>{1, 2, 3}));
    total += w.multiplicity;
  }
  EXPECT_EQ(total, 60);
}

TEST(Enumerate, BudgetAborts) {
  Budget tiny(5);
  EXPECT_THROW(enumerate_labelings(space(4, 2), tiny), BudgetExceeded);
}

TEST(Enumerate, CompositionsAndMatrices) {
  int count = 0;
  for_each_composition(3, 3, [&](std::span<const std::int64_t>) { ++count; });
  EXPECT_EQ(count, 10);
  Budget budget;
  int mats = 0;
  for_each_matrix_with_total(2, 2, budget, [&](const ConfusionMatrix&) { ++mats; });
  EXPECT_EQ(mats, 10);
  EXPECT_TRUE(is_unary(std::vector<std::int64_t>{0, 4}));
  EXPECT_FALSE(is_unary(std::vector<std::int64_t>{1, 3}));
}

}  // namespace
}  // namespace maudit
