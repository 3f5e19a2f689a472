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

#include <cstddef>
#include <vector>

#include "tlsfit/vector.hpp"

namespace tlsfit {

/// Real symmetric matrix of order n >= 1, stored densely in row-major order.
/// Entries are finite and (i, j) == (j, i) bit-for-bit.
class SymmetricMatrix {
 public:
  /// Zero matrix of the given order. Throws InvalidInput for order 0.
  explicit SymmetricMatrix(std::size_t order);

  static SymmetricMatrix Identity(std::size_t order);
  static SymmetricMatrix Diagonal(std::span<const double> diagonal);

  /// Builds from square row data. Rejects (InvalidInput) non-square or
  /// non-finite input and any pair with |a_ij - a_ji| > 1e-12 * max|a|. Pairs
  /// within the tolerance are replaced by their mean so the stored matrix is
  /// exactly symmetric.
  static SymmetricMatrix FromRows(const std::vector<Vector>& rows);

  std::size_t order() const noexcept { return order_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * order_ + j];
  }

  /// Writes both (i, j) and (j, i). Throws InvalidInput for a non-finite value.
  void Set(std::size_t i, std::size_t j, double value);

  double MaxAbsEntry() const;
  double FrobeniusNorm() const;

 private:
  std::size_t order_;
  std::vector<double> entries_;
};

/// Eigenpairs sorted by descending eigenvalue. Eigenvectors are unit length,
/// mutually orthogonal, and sign-canonicalized (first component larger than
/// 1e-12 in magnitude is positive).
///
/// Within a repeated eigenvalue the basis is not unique; the order the Jacobi
/// sweep produced is kept.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Vector> eigenvectors;
};

/// Cyclic Jacobi eigensolver. Sweeps until the off-diagonal Frobenius mass is
/// below 1e-14 times the Frobenius norm of the input, at most 100 sweeps;
/// throws NumericalFailure if that does not happen.
EigenDecomposition EigenSymmetric(const SymmetricMatrix& m);

}  // namespace tlsfit
