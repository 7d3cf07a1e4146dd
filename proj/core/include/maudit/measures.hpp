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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maudit/confusion.hpp"
#include "maudit/value.hpp"

namespace maudit {

// Table-1 measures on a single matrix. Singular configurations resolve to
// the maximal, minimal or baseline value as documented per function.

Value accuracy(const ConfusionMatrix& c);
/// c_ii / a_i is replaced by b_i / n when a_i = 0.
Value balanced_accuracy(const ConfusionMatrix& c);
/// Like balanced_accuracy, and c_ii / b_i is replaced by a_i / n when b_i = 0.
Value symmetric_balanced_accuracy(const ConfusionMatrix& c);
/// Zero denominator only for two equal constant labelings, which yields 1.
Value cohens_kappa(const ConfusionMatrix& c);
/**
 * Multiclass Matthews coefficient, kept as numerator * (1/D)^(1/2).
 * Both labelings constant: 1 if equal, -1 otherwise. One constant: 0.
 */
Value matthews_cc(const ConfusionMatrix& c);
/// Base 2m-2 logarithm; 0 log 0 = 0 and classes with a_j + b_j = 0 skipped.
Value confusion_entropy(const ConfusionMatrix& c);
Value correlation_distance(const ConfusionMatrix& c);
Value cd_prime(const ConfusionMatrix& c);

/// Zero denominator (no positives anywhere) yields 1. Requires beta > 0.
Value f_beta(const BinaryCounts& bc, const Rational& beta);
Value jaccard(const BinaryCounts& bc);
/**
 * (n c11 - a1 b1) over the power mean of a1 a0 and b1 b0 with exponent r.
 * Integer r gives an exact value; other r are evaluated in long double.
 * Constant labelings resolve as in matthews_cc. r = 0 is rejected.
 */
Value generalized_means(const BinaryCounts& bc, const Rational& r);
/// TP + TN - FP - FN. Audit-only; not scale invariant.
Value signed_agreement(const BinaryCounts& bc);
/// 1 if TP + TN > 0, else 0. Audit-only.
Value any_agreement(const BinaryCounts& bc);

enum class MeasureKind {
  Accuracy,
  BalancedAccuracy,
  SymmetricBalancedAccuracy,
  CohensKappa,
  Matthews,
  ConfusionEntropy,
  FBeta,
  Jaccard,
  GeneralizedMeans,
  CorrelationDistance,
  CorrelationDistancePrime,
  SignedAgreement,
  AnyAgreement,
};

enum class Arity { BinaryOnly, Multiclass };
enum class Orientation { Similarity, Dissimilarity };
enum class NumericClass { Exact, Transcendental };
enum class Averaging { None, Micro, Macro, Weighted };

struct MeasureDescriptor {
  MeasureKind kind = MeasureKind::Accuracy;
  /// beta for FBeta, r for GeneralizedMeans; unused otherwise.
  Rational param{1};
  Averaging scheme = Averaging::None;

  static MeasureDescriptor of(MeasureKind kind, Rational param = 1,
                              Averaging scheme = Averaging::None);

  /// Canonical identifier, e.g. "gm:r=-1:macro".
  std::string id() const;
  /// Short label for tables, e.g. "GM_1", "F_1", "CC^macro".
  std::string label() const;

  Arity arity() const;
  Orientation orientation() const;
  NumericClass numeric_class() const;
  bool audit_only() const {
    return kind == MeasureKind::SignedAgreement || kind == MeasureKind::AnyAgreement;
  }

  /// Same measure without the averaging suffix.
  MeasureDescriptor base() const;
  MeasureDescriptor with_scheme(Averaging s) const;

  /// Extremes and baseline of the orientation-normalized value, when the
  /// measure has them (m is the class count).
  std::optional<Value> c_max() const;
  std::optional<Value> c_min(int m) const;
  std::optional<Value> c_base(int m) const;

  friend bool operator==(const MeasureDescriptor&, const MeasureDescriptor&) = default;
};

/** Parses `name[:param=value][:scheme]`. Throws InputError. */
MeasureDescriptor parse_measure(std::string_view text);
/** Comma-separated list; "all" expands to default_measures(). */
std::vector<MeasureDescriptor> parse_measure_list(std::string_view text);

/// F1, J, CC, Acc, BA, kappa, CE, SBA, GM_1, CD.
std::vector<MeasureDescriptor> default_measures();
/// Every non-audit-only binary-capable measure of the registry.
std::vector<MeasureDescriptor> registry_binary_measures();

/** Raw value of the measure; ArityError for binary-only measures on m > 2. */
Value evaluate(const MeasureDescriptor& d, const ConfusionMatrix& c);
/** evaluate() negated for dissimilarities, so larger is always better. */
Value evaluate_oriented(const MeasureDescriptor& d, const ConfusionMatrix& c);
Value orient(const MeasureDescriptor& d, const Value& v);

const char* to_string(Averaging s);

}  // namespace maudit
