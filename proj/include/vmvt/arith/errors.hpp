/*
 * Copyright 2026 The vmvt Authors
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

namespace vmvt {

// Base class for all vmvt errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by an exact zero (rational, quadratic-extension, or interval
// divisor whose enclosure pins zero).
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// Two quadratic-extension values over different radicands were combined.
struct RadicandMismatch : Error {
  explicit RadicandMismatch(const std::string& msg) : Error(msg) {}
};

// An operation was invoked outside its stated hypotheses (k too small,
// nonpositive denominator in a Delta sum, ...).
struct HypothesisError : Error {
  explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

// A computation would exceed its configured memory or enumeration budget.
// Raised before any partial work is returned.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// An internal cross-check failed (two independent computation routes
// disagreed, or a constructed identity did not verify).
struct ContractViolation : Error {
  explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

}  // namespace vmvt
