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

#include "maudit/value.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "maudit/errors.hpp"

namespace maudit {

Value::Value() = default;

Value Value::exact(Rational q) {
  Value v;
  v.coeff_ = std::move(q);
  return v;
}

Value Value::algebraic(Rational coeff, Rational radicand, unsigned long root) {
  if (root == 0) throw InvariantError("algebraic value with zero root");
  if (radicand < 0) throw InvariantError("algebraic value with negative radicand");
  if (coeff == 0 || radicand == 0) return exact(0);
  if (root == 1) return exact(coeff * radicand);
  if (auto r = exact_root(radicand, root)) return exact(coeff * *r);
  Value v;
  v.coeff_ = std::move(coeff);
  v.radicand_ = std::move(radicand);
  v.root_ = root;
  return v;
}

Value Value::real(long double x) {
  Value v;
  v.exact_ = false;
  v.real_ = x;
  return v;
}

ArithmeticClass Value::arithmetic_class() const {
  if (!exact_) return ArithmeticClass::Real;
  return root_ == 1 ? ArithmeticClass::Rational : ArithmeticClass::Algebraic;
}

const Rational& Value::rational() const {
  if (!is_rational()) throw InvariantError("value is not rational: " + exact_string());
  return coeff_;
}

long double Value::approx() const {
  if (!exact_) return real_;
  long double c = to_long_double(coeff_);
  if (root_ == 1) return c;
  long double d = to_long_double(radicand_);
  long double r = root_ == 2 ? std::sqrt(d) : std::pow(d, 1.0L / static_cast<long double>(root_));
  return c * r;
}

int Value::sign() const {
  if (!exact_) return (real_ > 0) - (real_ < 0);
  return sgn(coeff_);
}

Value Value::operator-() const {
  Value v = *this;
  v.coeff_ = -v.coeff_;
  v.real_ = -v.real_;
  return v;
}

Value Value::scaled(const Rational& w) const {
  if (!exact_) return real(real_ * to_long_double(w));
  if (root_ == 1) return exact(coeff_ * w);
  return algebraic(coeff_ * w, radicand_, root_);
}

Value operator+(const Value& x, const Value& y) {
  if (x.exact_ && y.exact_) {
    if (x.coeff_ == 0) return y;
    if (y.coeff_ == 0) return x;
    if (x.root_ == y.root_ && x.radicand_ == y.radicand_)
      return Value::algebraic(x.coeff_ + y.coeff_, x.radicand_, x.root_);
  }
  return Value::real(x.approx() + y.approx());
}

std::string Value::exact_string() const {
  if (!exact_) return decimal_string(18);
  if (root_ == 1) return to_string(coeff_);
  return to_string(coeff_) + "*(" + to_string(radicand_) + ")^(1/" + std::to_string(root_) + ")";
}

std::string Value::decimal_string(int digits) const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, approx());
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

namespace {

// |c| * d^(1/k) raised to the L-th power, L a multiple of k.
Rational magnitude_power(const Value& v, unsigned long L) {
  Rational c = abs(v.coefficient());
  Rational p = pow(c, static_cast<long>(L));
  if (v.root() == 1) return p;
  return p * pow(v.radicand(), static_cast<long>(L / v.root()));
}

}  // namespace

Relation compare(const Value& x, const Value& y, long double eps) {
  if (x.is_exact() && y.is_exact()) {
    if (x.is_rational() && y.is_rational()) {
      int c = cmp(x.rational(), y.rational());
      return c < 0 ? Relation::Less : (c > 0 ? Relation::Greater : Relation::Equal);
    }
    int sx = x.sign(), sy = y.sign();
    if (sx != sy) return sx < sy ? Relation::Less : Relation::Greater;
    if (sx == 0) return Relation::Equal;
    unsigned long L = std::lcm(x.root(), y.root());
    int c = cmp(magnitude_power(x, L), magnitude_power(y, L));
    if (sx < 0) c = -c;
    return c < 0 ? Relation::Less : (c > 0 ? Relation::Greater : Relation::Equal);
  }
  long double d = x.approx() - y.approx();
  if (std::fabs(d) <= eps) return Relation::Equal;
  return d < 0 ? Relation::Less : Relation::Greater;
}

bool equal(const Value& x, const Value& y, long double eps) {
  return compare(x, y, eps) == Relation::Equal;
}

const char* to_string(ArithmeticClass c) {
  switch (c) {
    case ArithmeticClass::Rational: return "rational";
    case ArithmeticClass::Algebraic: return "algebraic";
    case ArithmeticClass::Real: return "real";
  }
  return "?";
}

const char* to_symbol(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
  }
  return "?";
}

}  // namespace maudit
