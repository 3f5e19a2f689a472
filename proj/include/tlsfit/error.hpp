// Copyright 2026 The tlsfit Authors.
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
#include <string_view>
#include <vector>

namespace tlsfit {

enum class ErrorKind {
  kInvalidInput,
  kDegenerateGeometry,
  kNumericalFailure,
  kSchemaError,
  kParseError,
};

std::string_view ToString(ErrorKind kind);

/// Base of every exception thrown by the library. The kind selects the CLI
/// exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message)
      : Error(ErrorKind::kInvalidInput, message) {}
};

class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& message)
      : Error(ErrorKind::kNumericalFailure, message) {}
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& message, std::string column)
      : Error(ErrorKind::kSchemaError, message), column_(std::move(column)) {}

  const std::string& column() const noexcept { return column_; }

 private:
  std::string column_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t row, std::string column)
      : Error(ErrorKind::kParseError, message),
        row_(row),
        column_(std::move(column)) {}

  /// 1-based line number in the source text (the header is line 1).
  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

/// Raised when the points span a flat of lower dimension than the requested
/// model needs. The flat the points actually occupy is reported: it passes
/// through `anchor` and is spanned by the orthonormal `basis` (empty when all
/// points coincide).
class DegenerateGeometry : public Error {
 public:
  DegenerateGeometry(const std::string& message, std::vector<double> anchor,
                     std::vector<std::vector<double>> basis)
      : Error(ErrorKind::kDegenerateGeometry, message),
        anchor_(std::move(anchor)),
        basis_(std::move(basis)) {}

  std::size_t flat_dimension() const noexcept { return basis_.size(); }
  const std::vector<double>& anchor() const noexcept { return anchor_; }
  const std::vector<std::vector<double>>& basis() const noexcept {
    return basis_;
  }

 private:
  std::vector<double> anchor_;
  std::vector<std::vector<double>> basis_;
};

}  // namespace tlsfit
