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

#include "maudit/measures.hpp"

#include <cmath>
#include <numbers>

#include "maudit/errors.hpp"

namespace maudit {

namespace {

struct Margins {
  Rational n, trace, sum_ab, sum_aa, sum_bb;
};

Margins margins(const ConfusionMatrix& c) {
  Margins g;
  g.n = c.total();
  for (int i = 0; i < c.num_classes(); ++i) {
    g.trace += c(i, i);
    g.sum_ab += c.row_sum(i) * c.col_sum(i);
    g.sum_aa += c.row_sum(i) * c.row_sum(i);
    g.sum_bb += c.col_sum(i) * c.col_sum(i);
  }
  return g;
}

// Both labelings constant: +1 when they agree, -1 otherwise.
Value constant_pair(bool same_class) { return Value::exact(same_class ? 1 : -1); }

}  // namespace

Value accuracy(const ConfusionMatrix& c) { return Value::exact(c.trace() / c.total()); }

Value balanced_accuracy(const ConfusionMatrix& c) {
  const int m = c.num_classes();
  Rational sum;
  for (int i = 0; i < m; ++i)
    sum += c.row_sum(i) == 0 ? c.col_sum(i) / c.total() : c(i, i) / c.row_sum(i);
  return Value::exact(sum / m);
}

Value symmetric_balanced_accuracy(const ConfusionMatrix& c) {
  const int m = c.num_classes();
  Rational sum;
  for (int i = 0; i < m; ++i) {
    sum += c.row_sum(i) == 0 ? c.col_sum(i) / c.total() : c(i, i) / c.row_sum(i);
    sum += c.col_sum(i) == 0 ? c.row_sum(i) / c.total() : c(i, i) / c.col_sum(i);
  }
  return Value::exact(sum / (2 * m));
}

Value cohens_kappa(const ConfusionMatrix& c) {
  Margins g = margins(c);
  Rational den = g.n * g.n - g.sum_ab;
  if (den == 0) return Value::exact(1);
  return Value::exact((g.n * g.trace - g.sum_ab) / den);
}

Value matthews_cc(const ConfusionMatrix& c) {
  Margins g = margins(c);
  Rational n2 = g.n * g.n;
  bool a_const = g.sum_aa == n2;
  bool b_const = g.sum_bb == n2;
  if (a_const && b_const) return constant_pair(g.trace == g.n);
  if (a_const || b_const) return Value::exact(0);
  Rational num = g.n * g.trace - g.sum_ab;
  Rational den = (n2 - g.sum_bb) * (n2 - g.sum_aa);
  return Value::algebraic(num, 1 / den, 2);
}

Value confusion_entropy(const ConfusionMatrix& c) {
  const int m = c.num_classes();
  long double sum = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      Rational pool = c.row_sum(j) + c.col_sum(j);
      if (pool == 0) continue;
      for (const Rational* x : {&c(j, i), &c(i, j)}) {
        if (*x == 0) continue;
        sum += to_long_double(*x) * std::log(to_long_double(*x / pool));
      }
    }
  }
  long double base = std::log(static_cast<long double>(2 * m - 2));
  long double ce = -sum / (2 * to_long_double(c.total()) * base);
  return Value::real(ce == 0 ? 0.0L : ce);
}

namespace {

long double clamp_unit(long double x) { return x < -1 ? -1 : (x > 1 ? 1 : x); }

}  // namespace

Value correlation_distance(const ConfusionMatrix& c) {
  Value cc = matthews_cc(c);
  if (cc.is_rational()) {
    if (cc.rational() == 1) return Value::real(0);
    if (cc.rational() == 0) return Value::real(0.5L);
    if (cc.rational() == -1) return Value::real(1);
  }
  return Value::real(std::acos(clamp_unit(cc.approx())) / std::numbers::pi_v<long double>);
}

Value cd_prime(const ConfusionMatrix& c) {
  Value cc = matthews_cc(c);
  return Value::real(std::sqrt(2 * (1 - clamp_unit(cc.approx()))));
}

Value f_beta(const BinaryCounts& bc, const Rational& beta) {
  if (beta <= 0) throw InputError("F-measure needs beta > 0");
  Rational b2 = beta * beta;
  Rational den = (1 + b2) * bc.c11 + b2 * bc.c10 + bc.c01;
  if (den == 0) return Value::exact(1);
  return Value::exact((1 + b2) * bc.c11 / den);
}

Value jaccard(const BinaryCounts& bc) {
  Rational den = bc.c11 + bc.c10 + bc.c01;
  if (den == 0) return Value::exact(1);
  return Value::exact(bc.c11 / den);
}

Value generalized_means(const BinaryCounts& bc, const Rational& r) {
  if (r == 0) throw InputError("GM_r needs r != 0; r -> 0 is the Matthews coefficient");
  const Rational n = bc.n();
  const Rational x = bc.a1() * bc.a0();
  const Rational y = bc.b1() * bc.b0();
  if (x == 0 && y == 0) return constant_pair(bc.c11 + bc.c00 == n);
  if (x == 0 || y == 0) return Value::exact(0);
  const Rational num = n * bc.c11 - bc.a1() * bc.b1();

  if (r.get_den() == 1 && abs(r) <= 64) {
    long k = r.get_num().get_si();
    Rational s = (pow(x, k) + pow(y, k)) / 2;
    // num / s^(1/k) for k > 0, num * s^(1/|k|) for k < 0.
    if (k > 0) return Value::algebraic(num, 1 / s, static_cast<unsigned long>(k));
    return Value::algebraic(num, s, static_cast<unsigned long>(-k));
  }

  const long double rr = to_long_double(r);
  const long double lx = std::log(to_long_double(x));
  const long double ly = std::log(to_long_double(y));
  // log of the power mean, stable for r near zero.
  long double log_s = std::log1p((std::expm1(rr * lx) + std::expm1(rr * ly)) / 2);
  long double log_mean = log_s / rr;
  return Value::real(to_long_double(num) * std::exp(-log_mean));
}

Value any_agreement(const BinaryCounts& bc) { return Value::exact(bc.c11 + bc.c00 > 0 ? 1 : 0); }

Value signed_agreement(const BinaryCounts& bc) {
  return Value::exact(bc.c11 + bc.c00 - bc.c01 - bc.c10);
}

}  // namespace maudit
