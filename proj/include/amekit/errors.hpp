// Copyright 2026 The amekit Authors
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
#include <utility>
#include <vector>

namespace amekit {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The canonical-form Gram matrix across a cut is not the identity.
class NotMaximallyEntangled : public DomainError {
 public:
  NotMaximallyEntangled(std::string cut, double deviation)
      : DomainError("state is not maximally entangled across cut " + cut +
                    " (Gram deviation " + std::to_string(deviation) + ")"),
        cut_(std::move(cut)),
        deviation_(deviation) {}

  const std::string& cut() const noexcept { return cut_; }
  double deviation() const noexcept { return deviation_; }

 private:
  std::string cut_;
  double deviation_;
};

/// A generator matrix has a singular maximal minor.
class NonMdsGenerator : public DomainError {
 public:
  explicit NonMdsGenerator(std::vector<std::size_t> columns)
      : DomainError(describe(columns)), columns_(std::move(columns)) {}

  /// Column indices of the offending k x k submatrix.
  const std::vector<std::size_t>& columns() const noexcept { return columns_; }

 private:
  static std::string describe(const std::vector<std::size_t>& columns) {
    std::string s = "generator is not MDS: submatrix on columns {";
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(columns[i]);
    }
    return s + "} is singular";
  }

  std::vector<std::size_t> columns_;
};

/// A secret-sharing scheme fails one of its defining conditions.
class InvalidScheme : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace amekit
