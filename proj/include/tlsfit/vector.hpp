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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace tlsfit {

/// Dense real n-vector. Dimension is a runtime property.
using Vector = std::vector<double>;

inline double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

inline double Norm(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

inline Vector Subtract(std::span<const double> a, std::span<const double> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// a + s * b
inline Vector AddScaled(std::span<const double> a, double s,
                        std::span<const double> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

/// Flips `v` in place so that its first component with magnitude above
/// `tolerance` is positive.
inline void CanonicalizeSign(Vector& v, double tolerance = 1e-12) {
  for (double c : v) {
    if (std::abs(c) > tolerance) {
      if (c < 0.0) {
        for (double& x : v) x = -x;
      }
      return;
    }
  }
}

}  // namespace tlsfit
