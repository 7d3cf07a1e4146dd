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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "maudit/confusion.hpp"
#include "maudit/labeling.hpp"

namespace maudit {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

/**
 * Counts visited states and throws BudgetExceeded past the limit. Not
 * thread-safe; give each worker its own share.
 */
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge(std::uint64_t states = 1);
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t remaining() const { return limit_ - used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct LabelingSpace {
  int n = 1;
  int m = 2;
  /// Fixed class sizes; when absent every labeling is produced.
  std::optional<std::vector<std::int64_t>> class_sizes;
  /// Skip labelings that leave some class empty.
  bool require_all_classes = false;
  /// Restrict to labelings whose first element has this class.
  std::optional<int> leading_label;
};

/** Number of labelings the space describes (ignoring require_all_classes). */
Integer labeling_count(const LabelingSpace& space);

/// Visits labelings in lexicographic order. Returning false stops early.
void for_each_labeling(const LabelingSpace& space, Budget& budget,
                       const std::function<bool(const Labeling&)>& visit);

std::vector<Labeling> enumerate_labelings(const LabelingSpace& space, Budget& budget);

/// n! / prod(k_i!)
Integer multinomial(std::span<const std::int64_t> parts);

/**
 * Visits every nonnegative integer matrix with row sums a and column sums b
 * in row-major lexicographic order, together with the number of labelings
 * B of size profile b that produce it against a fixed labeling of profile a.
 */
void for_each_confusion_matrix(
    std::span<const std::int64_t> a, std::span<const std::int64_t> b, Budget& budget,
    const std::function<void(const ConfusionMatrix&, const Integer&)>& visit);

struct WeightedMatrix {
  ConfusionMatrix matrix;
  Integer multiplicity;
};

std::vector<WeightedMatrix> enumerate_confusion_matrices(std::span<const std::int64_t> a,
                                                         std::span<const std::int64_t> b,
                                                         Budget& budget);

/// Compositions of n into `parts` nonnegative parts, lexicographic.
void for_each_composition(int n, int parts,
                          const std::function<void(std::span<const std::int64_t>)>& visit);

/// Every m x m nonnegative integer matrix with total n, lexicographic.
void for_each_matrix_with_total(int m, int n, Budget& budget,
                                const std::function<void(const ConfusionMatrix&)>& visit);

bool is_unary(std::span<const std::int64_t> sizes);

}  // namespace maudit
