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

#include "maudit/confusion.hpp"

#include <algorithm>
#include <sstream>

#include "maudit/errors.hpp"

namespace maudit {

BinaryCounts::BinaryCounts(Rational tp, Rational fn, Rational fp, Rational tn)
    : c11(std::move(tp)), c10(std::move(fn)), c01(std::move(fp)), c00(std::move(tn)) {
  if (c11 < 0 || c10 < 0 || c01 < 0 || c00 < 0) throw InputError("negative binary count");
  if (n() == 0) throw InputError("binary counts with zero total");
}

ConfusionMatrix::ConfusionMatrix(int m, std::vector<Rational> entries)
    : m_(m), c_(std::move(entries)), a_(m), b_(m) {
  if (m_ < 2) throw InputError("a confusion matrix needs at least two classes");
  if (c_.size() != static_cast<std::size_t>(m_) * m_)
    throw InputError("confusion matrix entry count does not match m*m");
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      const Rational& v = c_[i * m_ + j];
      if (v < 0) throw InputError("negative confusion matrix entry");
      a_[i] += v;
      b_[j] += v;
    }
    n_ += a_[i];
  }
  if (n_ == 0) throw InputError("confusion matrix with zero total");
}

ConfusionMatrix::ConfusionMatrix(const BinaryCounts& bc)
    : ConfusionMatrix(2, {bc.c00, bc.c01, bc.c10, bc.c11}) {}

ConfusionMatrix ConfusionMatrix::from_counts(int m, std::span<const std::int64_t> entries) {
  std::vector<Rational> e;
  e.reserve(entries.size());
  for (auto x : entries) e.emplace_back(static_cast<long>(x));
  return ConfusionMatrix(m, std::move(e));
}

ConfusionMatrix ConfusionMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  int m = static_cast<int>(rows.size());
  std::vector<Rational> e;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m) throw InputError("confusion matrix is not square");
    for (auto x : row) e.emplace_back(static_cast<long>(x));
  }
  return ConfusionMatrix(m, std::move(e));
}

Rational ConfusionMatrix::trace() const {
  Rational t;
  for (int i = 0; i < m_; ++i) t += (*this)(i, i);
  return t;
}

bool ConfusionMatrix::is_diagonal() const {
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

bool ConfusionMatrix::is_zero_diagonal() const {
  for (int i = 0; i < m_; ++i)
    if ((*this)(i, i) != 0) return false;
  return true;
}

bool ConfusionMatrix::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool ConfusionMatrix::true_unary() const {
  return std::any_of(a_.begin(), a_.end(), [&](const Rational& x) { return x == n_; });
}

bool ConfusionMatrix::pred_unary() const {
  return std::any_of(b_.begin(), b_.end(), [&](const Rational& x) { return x == n_; });
}

bool ConfusionMatrix::full_support() const {
  for (int i = 0; i < m_; ++i)
    if (a_[i] == 0 || b_[i] == 0) return false;
  return true;
}

BinaryCounts ConfusionMatrix::binary() const {
  if (m_ != 2) throw ArityError("binary counts requested from a " + std::to_string(m_) + "-class matrix");
  return BinaryCounts((*this)(1, 1), (*this)(1, 0), (*this)(0, 1), (*this)(0, 0));
}

ConfusionMatrix ConfusionMatrix::scaled(const Rational& alpha) const {
  std::vector<Rational> e = c_;
  for (auto& x : e) x *= alpha;
  return ConfusionMatrix(m_, std::move(e));
}

ConfusionMatrix ConfusionMatrix::with_entry(int i, int j, Rational v) const {
  std::vector<Rational> e = c_;
  e[i * m_ + j] = std::move(v);
  return ConfusionMatrix(m_, std::move(e));
}

std::string ConfusionMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < m_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

ConfusionMatrix build_confusion(const Labeling& truth, const Labeling& pred) {
  if (truth.size() != pred.size()) throw InputError("labelings differ in length");
  if (truth.num_classes() != pred.num_classes()) throw InputError("labelings differ in class count");
  int m = truth.num_classes();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m) * m, 0);
  for (std::size_t k = 0; k < truth.size(); ++k) ++counts[truth[k] * m + pred[k]];
  return ConfusionMatrix::from_counts(m, counts);
}

ConfusionMatrix transpose(const ConfusionMatrix& c) {
  int m = c.num_classes();
  std::vector<Rational> e(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) e[j * m + i] = c(i, j);
  return ConfusionMatrix(m, std::move(e));
}

ConfusionMatrix permute_classes(const ConfusionMatrix& c, std::span<const int> perm) {
  int m = c.num_classes();
  if (static_cast<int>(perm.size()) != m) throw InputError("permutation has wrong length");
  std::vector<bool> seen(m, false);
  for (int p : perm) {
    if (p < 0 || p >= m || seen[p]) throw InputError("not a permutation of the classes");
    seen[p] = true;
  }
  std::vector<Rational> e(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) e[i * m + j] = c(perm[i], perm[j]);
  return ConfusionMatrix(m, std::move(e));
}

BinaryCounts one_vs_all(const ConfusionMatrix& c, int i) {
  if (i < 0 || i >= c.num_classes()) throw InputError("class index out of range");
  const Rational& tp = c(i, i);
  return BinaryCounts(tp, c.row_sum(i) - tp, c.col_sum(i) - tp,
                      c.total() - c.row_sum(i) - c.col_sum(i) + tp);
}

ConfusionMatrix expected_matrix(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("class size vectors differ in length");
  Rational na, nb;
  for (const auto& x : a) {
    if (x < 0) throw InputError("negative class size");
    na += x;
  }
  for (const auto& x : b) {
    if (x < 0) throw InputError("negative class size");
    nb += x;
  }
  if (na != nb) throw InputError("class size vectors have different totals");
  if (na == 0) throw InputError("class sizes sum to zero");
  int m = static_cast<int>(a.size());
  std::vector<Rational> e(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) e[i * m + j] = a[i] * b[j] / na;
  return ConfusionMatrix(m, std::move(e));
}

ConfusionMatrix expected_matrix(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::vector<Rational> qa, qb;
  for (auto x : a) qa.emplace_back(static_cast<long>(x));
  for (auto x : b) qb.emplace_back(static_cast<long>(x));
  return expected_matrix(std::span<const Rational>(qa), std::span<const Rational>(qb));
}

}  // namespace maudit
