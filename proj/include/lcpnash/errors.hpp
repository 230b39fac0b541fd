// Copyright 2026 The lcpnash Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcpnash {

/** Thrown when a caller breaks a documented precondition (dimensions, domains). */
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/** A covering vector with a nonpositive entry. */
class CoveringVectorError : public std::domain_error {
 public:
  explicit CoveringVectorError(const std::string& what) : std::domain_error(what) {}
};

/** A cost matrix that was required to be strictly positive is not. */
class PositivityError : public std::domain_error {
 public:
  explicit PositivityError(const std::string& what) : std::domain_error(what) {}
};

/** An exhaustive routine was asked to run beyond its hard size cap. */
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * A point handed to ray extraction does not sit in the relative interior of
 * an unbounded edge. Under a valid beta this cannot happen, so it usually
 * means beta is below the vertex bound.
 */
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

/** A type-1 secondary direction that fails the nondegeneracy precondition. */
class DegenerateDirectionError : public std::runtime_error {
 public:
  explicit DegenerateDirectionError(const std::string& what) : std::runtime_error(what) {}
};

/** Malformed instance document. line/column are 1-based; 0 when unknown. */
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lcpnash
