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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maudit/confusion.hpp"
#include "maudit/enumerate.hpp"
#include "maudit/measures.hpp"
#include "maudit/value.hpp"

namespace maudit {

enum class Property { Max, Min, CSym, Sym, Dist, Mon, SMon, CB, ACB };

/// Column order of the property grid.
const std::vector<Property>& all_properties();
const char* to_string(Property p);
std::optional<Property> parse_property(std::string_view name);

/// Which matrices C qualify as the starting point of a Max/Min/Mon/SMon check.
enum class SupportFilter {
  /// No row or column sum equals n.
  NonUnary,
  /// Every class occurs in both labelings.
  Full,
};

struct AuditSpace {
  int m = 2;
  int n_min = 1;
  int n_max = 8;
  /// Bound for the labeling-triple enumeration behind Dist.
  int n_max_dist = 6;
  SupportFilter extremes_filter = SupportFilter::Full;
  SupportFilter monotone_filter = SupportFilter::NonUnary;
  /// NonUnary: any a, non-unary b. Full: every class present in a and b.
  SupportFilter baseline_filter = SupportFilter::NonUnary;
  long double eps = kDefaultEpsilon;
};

enum class Status { Satisfied, Violated };

enum class WitnessKind {
  ExtremeNotConstant,  ///< two (zero-)diagonal matrices with different values
  ExtremeNotStrict,    ///< a non-extreme matrix reaching the extreme value
  Asymmetric,
  ClassAsymmetric,
  Triangle,
  NotMonotone,
  BaselineVaries,
  ApproxBaselineVaries,
};

/**
 * Concrete counterexample. Values are raw measure values (not oriented).
 * Matrix roles per kind:
 *   ExtremeNotConstant / ExtremeNotStrict: {reference, offender}
 *   Asymmetric: {C, C^T};  ClassAsymmetric: {C, permuted C}, plus permutation
 *   Triangle: {C_AB, C_BC, C_AC} built from labelings {A, B, C}
 *   NotMonotone: {C, edited C}
 *   BaselineVaries / ApproxBaselineVaries: sizes {a, b, a', b'}; for the
 *   approximate variant matrices are the two expected matrices.
 */
struct Witness {
  WitnessKind kind;
  Property via;  ///< property whose check produced it (Dist reports Sym/Max)
  std::vector<ConfusionMatrix> matrices;
  std::vector<Value> values;
  std::vector<std::vector<std::int64_t>> sizes;
  std::vector<Labeling> labelings;
  std::vector<int> permutation;
  std::string note;
};

struct Verdict {
  std::string measure;
  Property property;
  Status status = Status::Satisfied;
  AuditSpace space;
  std::optional<Witness> witness;
  /// Violations found were all ties (a weak but not strict inequality).
  bool ties_only = false;

  bool holds() const { return status == Status::Satisfied; }
};

/** Exhaustive check of one property over the bounded space. */
Verdict check_property(const MeasureDescriptor& d, Property p, const AuditSpace& space,
                       Budget& budget);

/** Re-evaluates the witness through evaluate() and confirms the violation. */
bool replay_witness(const MeasureDescriptor& d, const Witness& w, long double eps = kDefaultEpsilon);

/**
 * E[M(A, B)] for B uniform over labelings with class sizes b, A of class
 * sizes a, via confusion-matrix multiplicities. Throws InputError when both
 * a and b are unary.
 */
Value exact_baseline_expectation(const MeasureDescriptor& d, std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b, Budget& budget);

/** Same expectation by enumerating every labeling B directly. */
Value baseline_expectation_by_labelings(const MeasureDescriptor& d,
                                        std::span<const std::int64_t> a,
                                        std::span<const std::int64_t> b, Budget& budget);

struct PreservationResult {
  Verdict verdict;
  /// Binary measures of the registry that have the property and were averaged.
  std::vector<std::string> measures_checked;
  /// Measure whose averaged form produced the witness, if any.
  std::string witness_measure;
};

/**
 * Averages every registry binary measure that has `p` in the binary space
 * (plus the audit-only TP+TN-FP-FN) and checks `p` for the averaged form
 * on `multiclass`. Strong monotonicity falls back to m = 4 when m = 3
 * produces no witness.
 */
PreservationResult check_averaging_preservation(Averaging scheme, Property p,
                                                const AuditSpace& binary,
                                                const AuditSpace& multiclass, Budget& budget);

// Rate-space analysis.

struct RatePoint {
  Rational p_a;
  Rational p_b;
};

/// (k/d, l/d) for k, l = 1..d-1.
std::vector<RatePoint> interior_grid(int divisions);

/// Binary matrix with total 1 and rates (p_ab, p_a, p_b).
ConfusionMatrix rate_matrix(const Rational& p_ab, const Rational& p_a, const Rational& p_b);

struct OrderEntry {
  RatePoint point;
  int order;
  long double derivative;
  long double threshold;
  bool vanishes;
};

struct BaselineOrderReport {
  std::string measure;
  int max_order;
  std::vector<OrderEntry> entries;

  bool vanishes_everywhere(int order) const;
  long double max_abs(int order) const;
};

/**
 * Central finite-difference estimates of the l-th derivative in p_ab at
 * p_ab = p_a p_b, l = 1..max_order (<= 4), with one Richardson step.
 */
BaselineOrderReport baseline_order(const MeasureDescriptor& d, int max_order,
                                   std::span<const RatePoint> grid, long double tolerance = 1e-6L);

struct ConditionResult {
  int index;
  bool holds;
  /// Smallest slack over the grid; negative means violated.
  long double worst_margin;
  std::size_t points;
  std::optional<RatePoint> worst_point;
};

struct NormalizerReport {
  Rational r;
  std::vector<ConditionResult> conditions;
  /// Largest gap between closed-form and finite-difference log-partials.
  long double max_partial_discrepancy = 0;

  bool all_hold() const;
};

/// s = 1 / M_r(p_a(1-p_a), p_b(1-p_b)); r = 0 is the geometric mean.
long double gm_normalizer(const Rational& r, long double p_a, long double p_b);

/**
 * The six conditions on the normalizer s of a linear-in-p_ab measure.
 * Strict conditions need slack above `strict_margin`.
 */
NormalizerReport check_gm_normalizer_conditions(const Rational& r, std::span<const RatePoint> grid,
                                                long double strict_margin = 1e-9L);

struct ImpossibilityRow {
  std::string measure;
  Verdict mon;
  Verdict dist;
  Verdict cb;
  int satisfied = 0;
  /// For two-of-three measures: the witness against the third replays.
  bool witness_replayed = false;
};

struct ImpossibilityReport {
  std::vector<ImpossibilityRow> rows;
  /// No measure holds all three of Mon, Dist and CB.
  bool consistent = true;
};

ImpossibilityReport corroborate_impossibility(const std::vector<MeasureDescriptor>& measures,
                                              const AuditSpace& space, Budget& budget);

}  // namespace maudit
