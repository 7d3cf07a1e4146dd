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

#include <string>

#include "maudit/rational.hpp"

namespace maudit {

/// Tolerance for ties between values that are not exact.
inline constexpr long double kDefaultEpsilon = 1e-12L;

enum class ArithmeticClass { Rational, Algebraic, Real };

enum class Relation { Less = -1, Equal = 0, Greater = 1 };

/**
 * A measure value. Exact values have the form coeff * radicand^(1/root)
 * with a rational coeff, a positive rational radicand and root >= 1; a
 * plain rational has root 1. Anything else is carried as a long double.
 */
class Value {
 public:
  Value();

  static Value exact(Rational q);
  static Value algebraic(Rational coeff, Rational radicand, unsigned long root);
  static Value real(long double x);

  bool is_exact() const { return exact_; }
  bool is_rational() const { return exact_ && root_ == 1; }
  ArithmeticClass arithmetic_class() const;

  /// Throws InvariantError unless is_rational().
  const Rational& rational() const;
  const Rational& coefficient() const { return coeff_; }
  const Rational& radicand() const { return radicand_; }
  unsigned long root() const { return root_; }

  long double approx() const;
  int sign() const;

  Value operator-() const;
  Value scaled(const Rational& w) const;

  /// Exact when both operands are rational or share radicand and root.
  friend Value operator+(const Value& x, const Value& y);
  friend Value operator-(const Value& x, const Value& y) { return x + (-y); }

  /// "7/10", "10*(1/600)^(1/2)" or a decimal rendering for reals.
  std::string exact_string() const;
  /// Fixed decimal rendering with the given number of digits.
  std::string decimal_string(int digits = 12) const;

 private:
  bool exact_ = true;
  Rational coeff_;
  Rational radicand_{1};
  unsigned long root_ = 1;
  long double real_ = 0;
};

/**
 * Orders two values. Exact pairs compare exactly; otherwise |x - y| <= eps
 * counts as a tie.
 */
Relation compare(const Value& x, const Value& y, long double eps = kDefaultEpsilon);

bool equal(const Value& x, const Value& y, long double eps = kDefaultEpsilon);

const char* to_string(ArithmeticClass c);
const char* to_symbol(Relation r);

}  // namespace maudit
