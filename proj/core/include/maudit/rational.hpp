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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace maudit {

using Integer = mpz_class;
using Rational = mpq_class;

/** q^e for any integer e; throws InputError for 0^e with e < 0. */
Rational pow(const Rational& q, long e);

/** Exact k-th root of q >= 0 if it is rational, else nullopt. */
std::optional<Rational> exact_root(const Rational& q, unsigned long k);

/** Nearest long double (about one ulp), valid for any magnitude that fits. */
long double to_long_double(const Rational& q);

/** "p" for integers, "p/q" otherwise. */
std::string to_string(const Rational& q);

/**
 * Parses "7", "-3/4", "0.25", "1e-9" or "2.5E3" exactly.
 * Throws InputError on anything else.
 */
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace maudit
