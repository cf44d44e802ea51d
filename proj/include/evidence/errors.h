/*
 * Copyright 2026 The Evidence Authors
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

#ifndef EVIDENCE_ERRORS_H_
#define EVIDENCE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace evidence {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed frame, focal set or mass assignment.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two operands were built on different frames of discernment.
class FrameMismatch : public Error {
 public:
  FrameMismatch() : Error("operands are defined on different frames of discernment") {}
  using Error::Error;
};

// Dempster's rule is undefined: the conflict coefficient is 1.
class TotalConflict : public Error {
 public:
  using Error::Error;
};

// A quadratic form that must be nonnegative evaluated clearly below zero.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Evidence document could not be read. line/column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace evidence

#endif  // EVIDENCE_ERRORS_H_
