// Copyright 2026 The argcl Authors
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

#ifndef ARGCL_ERRORS_HPP_
#define ARGCL_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argcl {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed relation, instance, abduction or DIMACS text. `line` is 1-based,
// 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A structural invariant of a value was violated (bad arity, trivial
// relation, invalid index, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// An exact computation would exceed a configured size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Should be unreachable; raised when a construction fails its own
// extensional self-check.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace argcl

#endif  // ARGCL_ERRORS_HPP_
