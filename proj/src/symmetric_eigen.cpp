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

#include "tlsfit/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tlsfit/error.hpp"

namespace tlsfit {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergence = 1e-14;
constexpr double kAsymmetry = 1e-12;

// Off-diagonal Frobenius mass of the full n x n working matrix.
double OffDiagonalNorm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  }
  return std::sqrt(2.0 * sum);
}

// Annihilates a(p, q) with one plane rotation and accumulates it into v.
void Rotate(std::vector<double>& a, std::vector<double>& v, std::size_t n,
            std::size_t p, std::size_t q) {
  const double apq = a[p * n + q];
  const double app = a[p * n + p];
  const double aqq = a[q * n + q];

  const double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a[p * n + p] = app - t * apq;
  a[q * n + q] = aqq + t * apq;
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a[k * n + p];
    const double akq = a[k * n + q];
    const double new_kp = c * akp - s * akq;
    const double new_kq = s * akp + c * akq;
    a[k * n + p] = new_kp;
    a[p * n + k] = new_kp;
    a[k * n + q] = new_kq;
    a[q * n + k] = new_kq;
  }

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v[k * n + p];
    const double vkq = v[k * n + q];
    v[k * n + p] = c * vkp - s * vkq;
    v[k * n + q] = s * vkp + c * vkq;
  }
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(std::size_t order)
    : order_(order), entries_(order * order, 0.0) {
  if (order == 0) throw InvalidInput("symmetric matrix order must be >= 1");
}

SymmetricMatrix SymmetricMatrix::Identity(std::size_t order) {
  SymmetricMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.Set(i, i, 1.0);
  return m;
}

SymmetricMatrix SymmetricMatrix::Diagonal(std::span<const double> diagonal) {
  SymmetricMatrix m(diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) m.Set(i, i, diagonal[i]);
  return m;
}

SymmetricMatrix SymmetricMatrix::FromRows(const std::vector<Vector>& rows) {
  const std::size_t n = rows.size();
  double max_abs = 0.0;
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw InvalidInput("matrix is not square: " + std::to_string(n) +
                         " rows, a row of length " +
                         std::to_string(row.size()));
    }
    for (double x : row) {
      if (!std::isfinite(x)) throw InvalidInput("matrix has a non-finite entry");
      max_abs = std::max(max_abs, std::abs(x));
    }
  }
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.entries_[i * n + i] = rows[i][i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > kAsymmetry * max_abs) {
        throw InvalidInput("matrix is not symmetric at (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")");
      }
      const double mean =
          rows[i][j] == rows[j][i] ? rows[i][j] : 0.5 * (rows[i][j] + rows[j][i]);
      m.entries_[i * n + j] = mean;
      m.entries_[j * n + i] = mean;
    }
  }
  return m;
}

void SymmetricMatrix::Set(std::size_t i, std::size_t j, double value) {
  if (!std::isfinite(value)) throw InvalidInput("matrix has a non-finite entry");
  entries_[i * order_ + j] = value;
  entries_[j * order_ + i] = value;
}

double SymmetricMatrix::MaxAbsEntry() const {
  double out = 0.0;
  for (double x : entries_) out = std::max(out, std::abs(x));
  return out;
}

double SymmetricMatrix::FrobeniusNorm() const {
  double sum = 0.0;
  for (double x : entries_) sum += x * x;
  return std::sqrt(sum);
}

EigenDecomposition EigenSymmetric(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  std::vector<double> a(n * n);
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    v[i * n + i] = 1.0;
  }

  const double threshold = kConvergence * m.FrobeniusNorm();
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (OffDiagonalNorm(a, n) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p * n + q] != 0.0) Rotate(a, v, n, p, q);
      }
    }
  }
  if (!converged) {
    throw NumericalFailure("Jacobi eigensolver did not converge in " +
                           std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i] > a[j * n + j];
  });

  EigenDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t col : order) {
    out.eigenvalues.push_back(a[col * n + col]);
    Vector vec(n);
    for (std::size_t k = 0; k < n; ++k) vec[k] = v[k * n + col];
    const double norm = Norm(vec);
    for (double& x : vec) x /= norm;
    CanonicalizeSign(vec);
    out.eigenvectors.push_back(std::move(vec));
  }
  return out;
}

}  // namespace tlsfit
