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

// Ground-truth clouds for line-fitting tests: noisy samples of a bee flying
// straight from A to B.
//
// Generator, reproducible bit-for-bit in any language with IEEE doubles:
//
//   * Uniforms come from SplitMix64 used as a counter-based generator: the
//     k-th draw (k = 0, 1, ...) is Mix(seed + (k + 1) * 0x9E3779B97F4A7C15)
//     with the standard SplitMix64 finalizer, mapped to [0, 1) as
//     (z >> 11) * 2^-53.
//   * Normals use the Marsaglia polar method: draw u, v as 2U - 1, reject
//     while s = u^2 + v^2 is >= 1 or == 0, then emit u*f and v*f with
//     f = sqrt(-2 ln(s) / s), in that order.
//   * Point i (i = 0..n-1) is A + t_i (B - A) + sigma * (e_x, e_y, e_z),
//     t_i = i / (n - 1), consuming normals in the order point 0 x, y, z,
//     point 1 x, y, z, ...

#pragma once

#include <array>
#include <cstdint>

#include "tlsfit/subspace_fit.hpp"

namespace tlsfit::synthetic {

struct LineCloudSpec {
  std::array<double, 3> a{};
  std::array<double, 3> b{};
  std::size_t n = 2;
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

struct LineCloud {
  PointCloud cloud;
  Vector true_direction;  // (b - a) / |b - a|, sign-canonicalized
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  /// Uniform in [0, 1) with 53 random bits.
  double NextUniform();

 private:
  std::uint64_t state_;
};

/// Standard normal deviates by the polar method over a SplitMix64 stream.
class PolarGaussian {
 public:
  explicit PolarGaussian(std::uint64_t seed) : uniform_(seed) {}

  double Next();

 private:
  SplitMix64 uniform_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Throws InvalidInput when a == b, n < 2, sigma is negative or any input is
/// non-finite.
LineCloud GenerateLineCloud(const LineCloudSpec& spec);

/// Angle between two undirected lines with the given directions, in degrees
/// in [0, 90]. Accurate for tiny angles.
double UndirectedAngleDeg(std::span<const double> u, std::span<const double> v);

}  // namespace tlsfit::synthetic
