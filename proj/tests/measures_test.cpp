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

#include "maudit/averaging.hpp"
#include "maudit/errors.hpp"
#include "maudit/measures.hpp"
#include "test_util.hpp"

namespace maudit {
namespace {

using testing::M;
using testing::Q;

// TP=3, FN=2, FP=1, TN=4; matrix [[4,1],[2,3]].
const BinaryCounts kB(3, 2, 1, 4);
const ConfusionMatrix kC(kB);

void expect_exact(const Value& v, const Rational& q) {
  ASSERT_TRUE(v.is_rational()) << v.exact_string();
  EXPECT_EQ(v.rational(), q);
}

TEST(Accuracy, Examples) {
  expect_exact(accuracy(kC), Rational(7, 10));
  expect_exact(accuracy(M({{2, 0}, {0, 3}})), 1);
  expect_exact(accuracy(M({{0, 2}, {3, 0}})), 0);
}

TEST(BalancedAccuracy, Examples) {
  expect_exact(balanced_accuracy(kC), Rational(7, 10));
  // a = (n, 0), everything predicted 0: the absent class scores b_1 / n = 0.
  expect_exact(balanced_accuracy(M({{4, 0}, {0, 0}})), Rational(1, 2));
}

TEST(SymmetricBalancedAccuracy, Examples) {
  expect_exact(symmetric_balanced_accuracy(kC), Rational(169, 240));
  ConfusionMatrix c = M({{3, 1, 0}, {2, 4, 1}, {0, 2, 5}});
  expect_exact(balanced_accuracy(c), Rational(19, 28));
  expect_exact(symmetric_balanced_accuracy(c), Rational(1697, 2520));
}

TEST(CohensKappa, Examples) {
  expect_exact(cohens_kappa(kC), Rational(2, 5));
  expect_exact(cohens_kappa(M({{1, 2}, {1, 0}})), Rational(-1, 2));
  expect_exact(cohens_kappa(M({{1, 3}, {1, 0}})), Rational(-3, 7));
  EXPECT_EQ(compare(cohens_kappa(M({{1, 2}, {1, 0}})), cohens_kappa(M({{1, 3}, {1, 0}}))),
            Relation::Less);
  expect_exact(cohens_kappa(M({{3, 1, 0}, {2, 4, 1}, {0, 2, 5}})), Rational(35, 71));
  expect_exact(cohens_kappa(M({{5, 0}, {0, 0}})), 1);
}

TEST(CohensKappa, ZeroDiagonalClosedForm) {
  for (auto c : {M({{0, 2}, {3, 0}}), M({{0, 1, 2}, {1, 0, 0}, {3, 1, 0}}), M({{0, 4}, {1, 0}})}) {
    Rational s = 0, n = c.total();
    for (int i = 0; i < c.num_classes(); ++i) s += c.row_sum(i) * c.col_sum(i);
    expect_exact(cohens_kappa(c), -s / (n * n - s));
  }
}

TEST(Matthews, Examples) {
  Value v = matthews_cc(kC);
  EXPECT_TRUE(v.is_exact());
  EXPECT_EQ(compare(v, Value::algebraic(10, Rational(1, 600), 2)), Relation::Equal);
  EXPECT_NEAR(static_cast<double>(v.approx()), 0.408248290463863, 1e-12);

  expect_exact(matthews_cc(M({{0, 1, 0}, {0, 0, 1}, {2, 0, 0}})), Rational(-1, 2));
  expect_exact(matthews_cc(M({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}})), Rational(-3, 5));

  Value c2 = matthews_cc(M({{1, 0, 0}, {7, 0, 0}, {0, 0, 1}}));
  Value c1 = matthews_cc(M({{1, 0, 0}, {6, 1, 0}, {0, 0, 1}}));
  expect_exact(c1, Rational(2, 5));
  EXPECT_NEAR(static_cast<double>(c2.approx()), 3 * std::sqrt(30.0) / 40, 1e-15);
  EXPECT_EQ(compare(c2, c1), Relation::Greater);
}

TEST(Matthews, ConstantLabelings) {
  expect_exact(matthews_cc(M({{4, 0}, {0, 0}})), 1);
  expect_exact(matthews_cc(M({{0, 4}, {0, 0}})), -1);
  expect_exact(matthews_cc(M({{2, 0}, {2, 0}})), 0);
}

TEST(ConfusionEntropy, Examples) {
  EXPECT_NEAR(static_cast<double>(confusion_entropy(M({{0, 6}, {6, 0}})).approx()), 1.0, 1e-12);
  EXPECT_EQ(confusion_entropy(M({{2, 0}, {0, 3}})).approx(), 0);
  EXPECT_NEAR(static_cast<double>(confusion_entropy(M({{0, 1}, {0, 2}})).approx()),
              0.38698801581456039, 1e-15);
  EXPECT_NEAR(static_cast<double>(confusion_entropy(M({{1, 5}, {5, 1}})).approx()),
              1.0525286715281615, 1e-15);
  EXPECT_NEAR(static_cast<double>(confusion_entropy(M({{3, 1, 0}, {2, 4, 1}, {0, 2, 5}})).approx()),
              0.49243366237633109, 1e-15);
  EXPECT_EQ(confusion_entropy(kC).arithmetic_class(), ArithmeticClass::Real);
}

TEST(FBeta, Examples) {
  expect_exact(f_beta(kB, 1), Rational(2, 3));
  expect_exact(f_beta(BinaryCounts(4, 0, 0, 3), 1), 1);
  expect_exact(f_beta(BinaryCounts(0, 2, 1, 3), 1), 0);
  expect_exact(f_beta(BinaryCounts(0, 0, 0, 3), 1), 1);
  EXPECT_THROW(f_beta(kB, 0), InputError);
  // (1 + 4) * 3 / (5 * 3 + 4 * 2 + 1)
  expect_exact(f_beta(kB, 2), Rational(5, 8));
}

TEST(Jaccard, Examples) {
  expect_exact(jaccard(kB), Rational(1, 2));
  expect_exact(jaccard(BinaryCounts(4, 0, 0, 3)), 1);
}

TEST(GeneralizedMeans, Examples) {
  expect_exact(generalized_means(kB, 1), Rational(20, 49));
  expect_exact(generalized_means(kB, -1), Rational(49, 120));
  Value r2 = generalized_means(kB, 2);
  EXPECT_TRUE(r2.is_exact());
  EXPECT_NEAR(static_cast<double>(r2.approx()), 10 * std::sqrt(2402.0) / 1201, 1e-15);
  EXPECT_THROW(parse_measure("gm:r=0"), InputError);
}

TEST(CorrelationDistance, Examples) {
  EXPECT_EQ(correlation_distance(M({{3, 0}, {0, 2}})).approx(), 0);
  EXPECT_NEAR(static_cast<double>(correlation_distance(M({{0, 3}, {2, 0}})).approx()), 1.0, 1e-15);
  std::vector<std::int64_t> a{2, 3}, b{4, 1};
  EXPECT_NEAR(static_cast<double>(correlation_distance(expected_matrix(a, b)).approx()), 0.5, 1e-15);
  EXPECT_NEAR(static_cast<double>(correlation_distance(M({{3, 1, 0}, {2, 4, 1}, {0, 2, 5}})).approx()),
              0.33505628682178633, 1e-15);
}

TEST(CdPrime, Examples) {
  EXPECT_EQ(cd_prime(M({{3, 0}, {0, 2}})).approx(), 0);
  EXPECT_NEAR(static_cast<double>(cd_prime(M({{0, 3}, {2, 0}})).approx()), 2.0, 1e-15);
  std::vector<std::int64_t> a{2, 3}, b{4, 1};
  EXPECT_NEAR(static_cast<double>(cd_prime(expected_matrix(a, b)).approx()), std::sqrt(2.0), 1e-15);
}

TEST(Registry, ParseGrammar) {
  EXPECT_EQ(parse_measure("gm:r=-1:macro"),
            MeasureDescriptor::of(MeasureKind::GeneralizedMeans, -1, Averaging::Macro));
  EXPECT_EQ(parse_measure("f:beta=1"), MeasureDescriptor::of(MeasureKind::FBeta, 1));
  EXPECT_EQ(parse_measure("f1"), MeasureDescriptor::of(MeasureKind::FBeta, 1));
  EXPECT_EQ(parse_measure("cc:macro").id(), "cc:macro");
  EXPECT_EQ(parse_measure("gm:r=-1:macro").id(), "gm:r=-1:macro");
  EXPECT_THROW(parse_measure("nope"), InputError);
  EXPECT_THROW(parse_measure("acc:r=2"), InputError);
  EXPECT_THROW(parse_measure("f:beta=0"), InputError);
  EXPECT_EQ(parse_measure_list("acc,cc,sba").size(), 3u);
}

TEST(Registry, Metadata) {
  EXPECT_EQ(parse_measure("ce").orientation(), Orientation::Dissimilarity);
  EXPECT_EQ(parse_measure("cd").orientation(), Orientation::Dissimilarity);
  EXPECT_EQ(parse_measure("kappa").orientation(), Orientation::Similarity);
  EXPECT_EQ(parse_measure("ce").numeric_class(), NumericClass::Transcendental);
  EXPECT_EQ(parse_measure("cdprime").numeric_class(), NumericClass::Transcendental);
  EXPECT_EQ(parse_measure("sba").numeric_class(), NumericClass::Exact);
  EXPECT_EQ(parse_measure("f1").arity(), Arity::BinaryOnly);
  EXPECT_EQ(parse_measure("f1:macro").arity(), Arity::Multiclass);
  EXPECT_EQ(default_measures().size(), 10u);
  for (const auto& d : registry_binary_measures()) EXPECT_FALSE(d.audit_only()) << d.id();
}

TEST(Evaluate, Dispatch) {
  EXPECT_EQ(evaluate(parse_measure("acc"), kC).rational(), Rational(7, 10));
  ConfusionMatrix m3 = M({{3, 1, 0}, {2, 4, 1}, {0, 2, 5}});
  EXPECT_THROW(evaluate(parse_measure("gm:r=1"), m3), ArityError);
  EXPECT_THROW(evaluate(parse_measure("f1"), m3), ArityError);
  // Oriented CE is negated so that larger is better.
  Value ce = evaluate(parse_measure("ce"), kC);
  EXPECT_EQ(evaluate_oriented(parse_measure("ce"), kC).approx(), -ce.approx());
}

TEST(Evaluate, MacroF1ByHand) {
  ConfusionMatrix c = M({{3, 1, 0}, {2, 4, 1}, {0, 2, 5}});
  // one-vs-all: (3,1,2,12) -> 6/9, (4,3,3,8) -> 8/14, (5,2,1,10) -> 10/13
  Rational want = (Rational(2, 3) + Rational(4, 7) + Rational(10, 13)) / 3;
  expect_exact(evaluate(parse_measure("f1:macro"), c), want);
}

TEST(Extremes, DescriptorConstants) {
  EXPECT_EQ(parse_measure("ba").c_base(3)->rational(), Rational(1, 3));
  EXPECT_EQ(parse_measure("cc").c_base(2)->rational(), 0);
  EXPECT_FALSE(parse_measure("acc").c_base(2).has_value());
  EXPECT_EQ(parse_measure("acc").c_max()->rational(), 1);
}

}  // namespace
}  // namespace maudit
