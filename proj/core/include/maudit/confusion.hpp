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
#include <vector>

#include "maudit/labeling.hpp"
#include "maudit/rational.hpp"

namespace maudit {

/**
 * Binary confusion counts. Class 1 is the positive class, so in matrix
 * form the layout is [[c00, c01], [c10, c11]].
 */
struct BinaryCounts {
  Rational c11;  ///< true positives
  Rational c10;  ///< false negatives
  Rational c01;  ///< false positives
  Rational c00;  ///< true negatives

  BinaryCounts() = default;
  BinaryCounts(Rational tp, Rational fn, Rational fp, Rational tn);

  Rational n() const { return c11 + c10 + c01 + c00; }
  Rational a1() const { return c11 + c10; }
  Rational a0() const { return c01 + c00; }
  Rational b1() const { return c11 + c01; }
  Rational b0() const { return c10 + c00; }

  friend bool operator==(const BinaryCounts&, const BinaryCounts&) = default;
};

/**
 * m x m matrix of nonnegative rationals; rows are true classes, columns are
 * predicted classes. Margins and total are cached at construction.
 */
class ConfusionMatrix {
 public:
  ConfusionMatrix(int m, std::vector<Rational> entries);
  explicit ConfusionMatrix(const BinaryCounts& bc);

  static ConfusionMatrix from_counts(int m, std::span<const std::int64_t> entries);
  static ConfusionMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int num_classes() const { return m_; }
  const Rational& operator()(int i, int j) const { return c_[i * m_ + j]; }
  const std::vector<Rational>& entries() const { return c_; }

  const Rational& total() const { return n_; }
  /// Row sum a_i: size of true class i.
  const Rational& row_sum(int i) const { return a_[i]; }
  /// Column sum b_j: size of predicted class j.
  const Rational& col_sum(int j) const { return b_[j]; }
  const std::vector<Rational>& row_sums() const { return a_; }
  const std::vector<Rational>& col_sums() const { return b_; }
  Rational trace() const;

  bool is_diagonal() const;
  bool is_zero_diagonal() const;
  bool is_integral() const;
  /// Some true class holds all n elements.
  bool true_unary() const;
  /// Some predicted class holds all n elements.
  bool pred_unary() const;
  /// Every class occurs in both labelings.
  bool full_support() const;

  /// Requires m == 2.
  BinaryCounts binary() const;

  ConfusionMatrix scaled(const Rational& alpha) const;
  ConfusionMatrix with_entry(int i, int j, Rational v) const;

  std::string to_string() const;

  friend bool operator==(const ConfusionMatrix& x, const ConfusionMatrix& y) {
    return x.m_ == y.m_ && x.c_ == y.c_;
  }

 private:
  int m_;
  std::vector<Rational> c_;
  std::vector<Rational> a_;
  std::vector<Rational> b_;
  Rational n_;
};

ConfusionMatrix build_confusion(const Labeling& truth, const Labeling& pred);
ConfusionMatrix transpose(const ConfusionMatrix& c);
/// Result entry (i, j) is c(perm[i], perm[j]).
ConfusionMatrix permute_classes(const ConfusionMatrix& c, std::span<const int> perm);
BinaryCounts one_vs_all(const ConfusionMatrix& c, int i);
/// Entries a_i * b_j / n.
ConfusionMatrix expected_matrix(std::span<const Rational> a, std::span<const Rational> b);
ConfusionMatrix expected_matrix(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

}  // namespace maudit
