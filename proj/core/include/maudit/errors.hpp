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

#include <stdexcept>
#include <string>

namespace maudit {

/** Base for every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Malformed or inconsistent input (lengths, margins, labels, parameters). */
class InputError : public Error {
 public:
  using Error::Error;
};

/** A binary-only measure was applied to a multiclass matrix. */
class ArityError : public InputError {
 public:
  using InputError::InputError;
};

/** An enumeration would visit more states than the configured budget. */
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/** An internal consistency check failed; indicates a bug, not bad input. */
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace maudit
