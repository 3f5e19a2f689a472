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

#include "tlsfit/synthetic.hpp"

#include <cmath>
#include <numbers>

#include "tlsfit/error.hpp"

namespace tlsfit::synthetic {

std::uint64_t SplitMix64::Next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::NextUniform() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

double PolarGaussian::Next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform_.NextUniform() - 1.0;
    v = 2.0 * uniform_.NextUniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

LineCloud GenerateLineCloud(const LineCloudSpec& spec) {
  for (int k = 0; k < 3; ++k) {
    if (!std::isfinite(spec.a[k]) || !std::isfinite(spec.b[k])) {
      throw InvalidInput("segment endpoints must be finite");
    }
  }
  if (spec.a == spec.b) throw InvalidInput("segment endpoints coincide");
  if (spec.n < 2) throw InvalidInput("need at least 2 samples");
  if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma)) {
    throw InvalidInput("noise sigma must be finite and >= 0");
  }

  const Vector delta = Subtract(spec.b, spec.a);
  PolarGaussian noise(spec.seed);
  std::vector<Vector> points;
  std::vector<std::string> labels;
  points.reserve(spec.n);
  labels.reserve(spec.n);
  const double last = static_cast<double>(spec.n - 1);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const double t = static_cast<double>(i) / last;
    Vector p(3);
    for (std::size_t k = 0; k < 3; ++k) p[k] = spec.a[k] + t * delta[k];
    for (std::size_t k = 0; k < 3; ++k) p[k] += spec.sigma * noise.Next();
    points.push_back(std::move(p));
    labels.push_back(std::to_string(i));
  }

  Vector direction = delta;
  const double len = Norm(direction);
  for (double& x : direction) x /= len;
  CanonicalizeSign(direction);
  return LineCloud{PointCloud(std::move(points), std::move(labels)),
                   std::move(direction)};
}

double UndirectedAngleDeg(std::span<const double> u,
                          std::span<const double> v) {
  if (u.size() != v.size()) throw InvalidInput("direction dimensions differ");
  const double nu = Norm(u);
  Vector unit(u.begin(), u.end());
  for (double& x : unit) x /= nu;
  const double along = Dot(v, unit);
  const double across = Norm(AddScaled(v, -along, unit));
  return std::atan2(across, std::abs(along)) * 180.0 / std::numbers::pi;
}

}  // namespace tlsfit::synthetic
