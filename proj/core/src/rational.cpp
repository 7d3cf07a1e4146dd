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

#include "maudit/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "maudit/errors.hpp"

namespace maudit {

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw InputError("zero raised to a negative power");
    Rational inv = 1 / q;
    return pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::optional<Integer> integer_root(const Integer& x, unsigned long k) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
  if (k == 0) throw InputError("zeroth root");
  if (q < 0) throw InputError("root of a negative rational");
  if (k == 1) return q;
  auto num = integer_root(q.get_num(), k);
  if (!num) return std::nullopt;
  auto den = integer_root(q.get_den(), k);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

namespace {

long double integer_to_long_double(const Integer& x) {
  // x is nonnegative and below 2^80 here.
  Integer hi = x >> 64;
  Integer lo = x - (hi << 64);
  return std::ldexp(static_cast<long double>(hi.get_ui()), 64) +
         static_cast<long double>(lo.get_ui());
}

}  // namespace

long double to_long_double(const Rational& q) {
  if (q == 0) return 0.0L;
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  long exp = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  long shift = 72 - exp;
  Integer scaled;
  if (shift >= 0) {
    scaled = (num << static_cast<unsigned long>(shift)) / den;
  } else {
    scaled = num / (den << static_cast<unsigned long>(-shift));
  }
  long double x = std::ldexp(integer_to_long_double(scaled), static_cast<int>(-shift));
  return q < 0 ? -x : x;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer p, q;
    if (p.set_str(s.substr(0, slash), 10) != 0 || q.set_str(s.substr(slash + 1), 10) != 0 ||
        q == 0)
      return fail();
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (seen_point) return fail();
      seen_point = true;
    } else {
      digits += s[i];
      if (seen_point) ++frac_digits;
    }
  }
  if (digits.empty()) return fail();
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return fail();
    std::string tail = s.substr(i + 1);
    if (tail.empty()) return fail();
    char* end = nullptr;
    exponent = std::strtol(tail.c_str(), &end, 10);
    if (*end != '\0' || exponent > 4096 || exponent < -4096) return fail();
  }
  Rational r{Integer(digits, 10)};
  r *= pow(Rational(10), exponent - frac_digits);
  return negative ? Rational(-r) : r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace maudit
