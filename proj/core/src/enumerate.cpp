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

#include "maudit/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "maudit/errors.hpp"

namespace maudit {

void Budget::charge(std::uint64_t states) {
  if (states > limit_ - used_) {
    used_ = limit_;
    throw BudgetExceeded("enumeration budget of " + std::to_string(limit_) + " states exhausted");
  }
  used_ += states;
}

namespace {

void validate_space(const LabelingSpace& s) {
  if (s.n < 1) throw InputError("labelings need n >= 1");
  if (s.m < 2) throw InputError("labelings need m >= 2");
  if (s.class_sizes) {
    if (static_cast<int>(s.class_sizes->size()) != s.m)
      throw InputError("class size vector length differs from m");
    std::int64_t total = 0;
    for (auto k : *s.class_sizes) {
      if (k < 0) throw InputError("negative class size");
      total += k;
    }
    if (total != s.n) throw InputError("class sizes do not sum to n");
  }
  if (s.leading_label && (*s.leading_label < 0 || *s.leading_label >= s.m))
    throw InputError("leading label outside the class range");
}

bool has_all_classes(const std::vector<int>& labels, int m) {
  std::vector<bool> seen(m, false);
  int count = 0;
  for (int l : labels)
    if (!seen[l]) {
      seen[l] = true;
      ++count;
    }
  return count == m;
}

}  // namespace

Integer labeling_count(const LabelingSpace& space) {
  validate_space(space);
  if (space.class_sizes) {
    std::vector<std::int64_t> sizes = *space.class_sizes;
    if (space.require_all_classes && std::count(sizes.begin(), sizes.end(), 0)) return 0;
    if (space.leading_label) {
      if (sizes[*space.leading_label] == 0) return 0;
      --sizes[*space.leading_label];
    }
    return multinomial(sizes);
  }
  const unsigned long m = space.m, n = space.n;
  auto power = [](unsigned long b, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
  };
  Integer total = power(m, n);
  if (space.require_all_classes) {
    // inclusion-exclusion over the classes left out
    total = 0;
    for (unsigned long k = 0; k <= m; ++k) {
      Integer term = binomial(m, k) * power(m - k, n);
      total += k % 2 ? Integer(-term) : term;
    }
  }
  // By symmetry each leading label starts the same number of labelings.
  if (space.leading_label) total /= m;
  return total;
}

void for_each_labeling(const LabelingSpace& space, Budget& budget,
                       const std::function<bool(const Labeling&)>& visit) {
  validate_space(space);
  const int n = space.n, m = space.m;
  std::vector<int> labels(n, 0);

  auto emit = [&]() -> bool {
    budget.charge();
    if (space.require_all_classes && !has_all_classes(labels, m)) return true;
    return visit(Labeling(labels, m));
  };

  if (space.class_sizes) {
    std::size_t pos = 0;
    for (int c = 0; c < m; ++c)
      for (std::int64_t k = 0; k < (*space.class_sizes)[c]; ++k) labels[pos++] = c;
    do {
      if (space.leading_label) {
        if (labels[0] < *space.leading_label) continue;
        if (labels[0] > *space.leading_label) return;
      }
      if (!emit()) return;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return;
  }

  const int first = space.leading_label.value_or(0);
  labels[0] = first;
  while (true) {
    if (!emit()) return;
    int k = n - 1;
    while (k >= 0 && labels[k] == m - 1) labels[k--] = 0;
    if (k < 0 || (k == 0 && space.leading_label)) return;
    ++labels[k];
  }
}

std::vector<Labeling> enumerate_labelings(const LabelingSpace& space, Budget& budget) {
  std::vector<Labeling> out;
  for_each_labeling(space, budget, [&](const Labeling& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

Integer multinomial(std::span<const std::int64_t> parts) {
  std::int64_t n = 0;
  Integer den = 1;
  for (auto k : parts) {
    if (k < 0) throw InputError("negative multinomial part");
    n += k;
    den *= factorial(static_cast<unsigned long>(k));
  }
  return factorial(static_cast<unsigned long>(n)) / den;
}

bool is_unary(std::span<const std::int64_t> sizes) {
  std::int64_t n = std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
  return std::find(sizes.begin(), sizes.end(), n) != sizes.end();
}

void for_each_confusion_matrix(
    std::span<const std::int64_t> a, std::span<const std::int64_t> b, Budget& budget,
    const std::function<void(const ConfusionMatrix&, const Integer&)>& visit) {
  if (a.size() != b.size()) throw InputError("class size vectors differ in length");
  const int m = static_cast<int>(a.size());
  if (m < 2) throw InputError("need at least two classes");
  std::int64_t na = 0, nb = 0;
  for (auto x : a) {
    if (x < 0) throw InputError("negative class size");
    na += x;
  }
  for (auto x : b) {
    if (x < 0) throw InputError("negative class size");
    nb += x;
  }
  if (na != nb) throw InputError("class size vectors have different totals");
  if (na == 0) throw InputError("class sizes sum to zero");

  std::vector<std::int64_t> cells(static_cast<std::size_t>(m) * m, 0);
  std::vector<std::int64_t> col_left(b.begin(), b.end());

  Integer row_factorials = 1;
  for (auto x : a) row_factorials *= factorial(static_cast<unsigned long>(x));

  // Fill row-major; cell values ascend so leaves arrive in lexicographic order.
  std::function<void(int, int, std::int64_t)> fill = [&](int i, int j, std::int64_t row_left) {
    if (i == m) {
      budget.charge();
      Integer den = 1;
      for (auto c : cells) den *= factorial(static_cast<unsigned long>(c));
      visit(ConfusionMatrix::from_counts(m, cells), row_factorials / den);
      return;
    }
    std::int64_t later = 0;
    for (int k = j + 1; k < m; ++k) later += col_left[k];
    std::int64_t lo = std::max<std::int64_t>(0, row_left - later);
    std::int64_t hi = std::min(row_left, col_left[j]);
    for (std::int64_t v = lo; v <= hi; ++v) {
      cells[i * m + j] = v;
      col_left[j] -= v;
      if (j + 1 == m) {
        fill(i + 1, 0, i + 1 < m ? a[i + 1] : 0);
      } else {
        fill(i, j + 1, row_left - v);
      }
      col_left[j] += v;
    }
    cells[i * m + j] = 0;
  };
  fill(0, 0, a[0]);
}

std::vector<WeightedMatrix> enumerate_confusion_matrices(std::span<const std::int64_t> a,
                                                         std::span<const std::int64_t> b,
                                                         Budget& budget) {
  std::vector<WeightedMatrix> out;
  for_each_confusion_matrix(a, b, budget, [&](const ConfusionMatrix& c, const Integer& k) {
    out.push_back({c, k});
  });
  return out;
}

void for_each_composition(int n, int parts,
                          const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (parts < 1 || n < 0) throw InputError("invalid composition request");
  std::vector<std::int64_t> x(parts, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == parts - 1) {
      x[k] = left;
      visit(x);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      x[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, n);
}

void for_each_matrix_with_total(int m, int n, Budget& budget,
                                const std::function<void(const ConfusionMatrix&)>& visit) {
  if (n < 1) throw InputError("matrix total must be positive");
  for_each_composition(n, m * m, [&](std::span<const std::int64_t> cells) {
    budget.charge();
    visit(ConfusionMatrix::from_counts(m, cells));
  });
}

}  // namespace maudit
