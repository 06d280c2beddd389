// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUTTEFORGE_ERRORS_HPP_
#define TUTTEFORGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tutteforge {

// Typed failures. The C API maps each type to a distinct status code, and the
// CLI maps those to exit codes, so user error (bad input) stays separate from
// budget exhaustion and from internal verification failures.

// Bad argument to an operation: bad fixture name, bad config, bad label set.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands with incompatible dimensions.
class DimensionMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element label that is not in the ground set.
class UnknownElementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance exceeds a hard size limit of the requested algorithm.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable node budget ran out before the computation finished.
class BudgetExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by an exact zero.
class ZeroDivisorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed. Must never happen on correct builds.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace tutteforge

#endif  // TUTTEFORGE_ERRORS_HPP_
