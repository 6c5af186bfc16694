// Copyright 2026 The aphi Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace aphi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (t < 0, empty set).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation beyond an N-function's numerically finite range.
class CapError : public Error {
 public:
  using Error::Error;
};

/// A candidate N-function failed convexity or monotonicity while bracketing.
class ConvexityError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for this kind of group (e.g. a unit on a Z-window).
class ScopeError : public Error {
 public:
  using Error::Error;
};

/// A construction cannot be realized inside the available window.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Malformed structured-text input. Line and column are 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(what), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A computed quantity contradicts a proven inequality. Carries a state dump.
class ContradictionError : public Error {
 public:
  ContradictionError(const std::string& what, std::string dump)
      : Error(what), dump_(std::move(dump)) {}
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

}  // namespace aphi
