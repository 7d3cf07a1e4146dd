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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maudit/confusion.hpp"
#include "maudit/enumerate.hpp"
#include "maudit/labeling.hpp"
#include "maudit/measures.hpp"

namespace maudit {

struct Triplet {
  Labeling truth;
  Labeling first;
  Labeling second;
};

enum class Consistency { Consistent, Inconsistent };

/// Relation between the oriented values M(A, B1) and M(A, B2).
Relation triplet_relation(const MeasureDescriptor& d, const Triplet& t, long double eps = kDefaultEpsilon);

Consistency triplet_verdict(const MeasureDescriptor& m1, const MeasureDescriptor& m2, const Triplet& t,
                            long double eps = kDefaultEpsilon);

/// One measure prefers B1 and the other prefers B2.
bool strictly_inconsistent(const MeasureDescriptor& m1, const MeasureDescriptor& m2, const Triplet& t,
                           long double eps = kDefaultEpsilon);

enum class GroupMethod {
  /// Every ordered triplet of binary labelings with both classes present.
  Labelings,
  /// Same counts from pairs of confusion matrices weighted by multiplicity.
  MatrixClasses,
};

struct DistinguishOptions {
  bool include_equal_predictions = true;  ///< count triplets with B1 == B2
  int threads = 1;
  long double eps = kDefaultEpsilon;
};

struct IndistinguishabilityResult {
  int n = 0;
  GroupMethod method = GroupMethod::Labelings;
  std::vector<std::string> measures;
  /// inconsistent[i][j]: triplets on which measures i and j disagree.
  std::vector<std::vector<std::uint64_t>> inconsistent;
  std::uint64_t triplets = 0;
  /// Maximal groups (size >= 2) of pairwise indistinguishable measures.
  std::vector<std::vector<std::string>> groups;
};

IndistinguishabilityResult indistinguishable_groups(int n, const std::vector<MeasureDescriptor>& measures,
                                                    GroupMethod method, Budget& budget,
                                                    const DistinguishOptions& options = {});

struct PairStat {
  std::string first;
  std::string second;
  std::uint64_t inconsistent = 0;
  std::uint64_t total = 0;
  /// Comparisons whose verdict differs between eps/10 and 10 eps.
  std::uint64_t unstable = 0;

  Rational rate() const;
  double percent() const;
};

struct ConsistencyReport {
  std::vector<std::string> measures;
  std::vector<PairStat> pairs;  ///< i < j, row-major over measures
  std::uint64_t comparisons = 0;

  const PairStat& at(std::size_t i, std::size_t j) const;
};

using MatrixPair = std::pair<ConfusionMatrix, ConfusionMatrix>;

ConsistencyReport pairwise_inconsistency(const std::vector<MeasureDescriptor>& measures,
                                         std::span<const MatrixPair> comparisons,
                                         long double eps = kDefaultEpsilon);

/// Every unordered pair of distinct models.
std::vector<MatrixPair> unordered_pairs(std::span<const ConfusionMatrix> models);

struct RankingTable {
  std::vector<std::string> measures;
  std::vector<std::string> models;
  std::vector<std::vector<Value>> values;  ///< [measure][model], raw values
  std::vector<std::vector<int>> ranks;     ///< competition ranks, 1 = best
};

RankingTable rank_models(const std::vector<MeasureDescriptor>& measures, const Labeling& truth,
                         const std::vector<std::pair<std::string, Labeling>>& predictions,
                         long double eps = kDefaultEpsilon);

RankingTable rank_matrices(const std::vector<MeasureDescriptor>& measures,
                           const std::vector<std::pair<std::string, ConfusionMatrix>>& models,
                           long double eps = kDefaultEpsilon);

}  // namespace maudit
