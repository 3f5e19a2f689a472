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

// Release gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "test_support.hpp"
#include "tlsfit/classic_regression.hpp"
#include "tlsfit/economy.hpp"
#include "tlsfit/error.hpp"
#include "tlsfit/io/csv.hpp"
#include "tlsfit/subspace_fit.hpp"
#include "tlsfit/symmetric_eigen.hpp"
#include "tlsfit/synthetic.hpp"

namespace tlsfit {
namespace {

namespace fs = std::filesystem;
using testing::Matrix;
using testing::UpToSignDistance;

constexpr int kPropertyCases = 250;
constexpr double kFrozenSeed42AngleDeg = 0x1.2c720c855669cp-2;

// Collects failed checks of one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void Near(double actual, double expected, double tol, const std::string& what) {
    if (!(std::abs(actual - expected) <= tol)) {
      std::ostringstream s;
      s.precision(17);
      s << what << ": " << actual << " vs " << expected << " (tol " << tol << ")";
      failures_.push_back(s.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string title;
  std::function<void(Check&)> body;
};

PointCloud Country(std::string_view code) {
  return economy::Trajectory(economy::FindSeries(economy::V4Dataset(), code));
}

void NievergeltOls(Check& c) {
  const auto l = OlsLine(testing::kNievergeltX, testing::kNievergeltY);
  c.Near(l.slope, 0.45, 1e-12, "k");
  c.Near(l.intercept, 3.2, 1e-12, "b");
}

void NievergeltConjugate(Check& c) {
  const auto l = ConjugateLine(testing::kNievergeltX, testing::kNievergeltY);
  c.Near(l.slope, 0.45, 1e-12, "c");
  c.Near(l.intercept, 1.75, 1e-12, "d");
}

void NievergeltTls(Check& c) {
  const double s = std::sqrt(0.5);
  const auto line = FitLine(testing::NievergeltCloud());
  c.Near(line.anchor[0], 4.0, 1e-9, "anchor x");
  c.Near(line.anchor[1], 5.0, 1e-9, "anchor y");
  c.Expect(UpToSignDistance(line.direction, Vector{s, s}) <= 1e-9, "direction");
  // Closed form for 2D: (Sxx + Syy)/2 - sqrt(((Sxx - Syy)/2)^2 + Sxy^2)
  // with Sxx = Syy = 20, Sxy = 9.
  c.Near(line.error.sum_sq, 11.0, 1e-9, "sum_sq");

  std::vector<Vector> swapped;
  for (std::size_t i = 0; i < testing::kNievergeltX.size(); ++i) {
    swapped.push_back({testing::kNievergeltY[i], testing::kNievergeltX[i]});
  }
  const auto sw = FitLine(PointCloud(swapped));
  c.Near(sw.anchor[0], 5.0, 1e-9, "swapped anchor x");
  c.Near(sw.anchor[1], 4.0, 1e-9, "swapped anchor y");
  c.Expect(UpToSignDistance(sw.direction, Vector{s, s}) <= 1e-9, "swapped direction");
  c.Near(sw.error.sum_sq, 11.0, 1e-9, "swapped sum_sq");
}

void V4Centroids(Check& c) {
  const std::pair<const char*, Vector> rows[] = {
      {"SK", {13.8714, 4.5571, 9.1429}},
      {"PL", {13.1143, 5.5571, 17.8143}},
      {"CZ", {5.7714, 1.8429, 7.6143}},
      {"HU", {8.3714, 3.6143, 17.5}},  // from the HU indicator rows
  };
  for (const auto& [code, expected] : rows) {
    const auto p = economy::FitEconomyPlane(economy::FindSeries(economy::V4Dataset(), code));
    for (std::size_t k = 0; k < 3; ++k) {
      c.Near(p.plane.centroid[k], expected[k], 1e-4,
             std::string(code) + " centroid[" + std::to_string(k) + "]");
    }
  }
}

void V4Normals(Check& c) {
  const std::pair<const char*, Vector> rows[] = {
      {"SK", {0.6704, 0.7195, -0.1811}},
      {"PL", {-0.4083, -0.9059, 0.1123}},
      {"CZ", {0.7632, 0.4525, 0.4612}},
  };
  for (const auto& [code, expected] : rows) {
    const auto n = FitHyperplane(Country(code)).normal;
    c.Expect(UpToSignDistance(n, expected) <= 1e-3, std::string(code) + " normal");
  }
}

void V4Errors(Check& c) {
  const std::pair<const char*, double> rows[] = {
      {"SK", 4.2633}, {"PL", 4.3106}, {"CZ", 4.6111}};
  // Oracle: exactly one candidate aggregate must match all three rows.
  std::vector<ErrorMetric> matching;
  for (auto m : {ErrorMetric::kSumSq, ErrorMetric::kRootSumSq, ErrorMetric::kRms,
                 ErrorMetric::kSumAbs}) {
    bool all = true;
    for (const auto& [code, err] : rows) {
      all = all && std::abs(FitHyperplane(Country(code)).error.Value(m) - err) <= 1e-2;
    }
    if (all) matching.push_back(m);
  }
  c.Expect(matching.size() == 1 && matching[0] == kDefaultErrorMetric,
           "default metric is the unique oracle match");
  for (const auto& [code, err] : rows) {
    const auto p = economy::FitEconomyPlane(economy::FindSeries(economy::V4Dataset(), code));
    c.Near(p.err_reported, err, 1e-2, std::string(code) + " Err");
  }
}

void PropertySuite(Check& c) {
  std::mt19937_64 rng(20261017);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> shift(-50.0, 50.0);

  // Rigid motion.
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t dim = 2 + static_cast<std::size_t>(i % 3);
    const PointCloud cloud = testing::RandomCloud(rng, dim + 4, dim);
    const Matrix r = testing::RandomRotation(rng, dim);
    Vector t(dim);
    for (double& x : t) x = shift(rng);
    std::vector<Vector> moved;
    for (const auto& p : cloud.points()) {
      Vector q = testing::Apply(r, p);
      for (std::size_t k = 0; k < dim; ++k) q[k] += t[k];
      moved.push_back(q);
    }
    const double a = FitLine(cloud).error.sum_sq;
    const double b = FitLine(PointCloud(moved)).error.sum_sq;
    const double pa = FitHyperplane(cloud).error.sum_sq;
    const double pb = FitHyperplane(PointCloud(moved)).error.sum_sq;
    c.Expect(std::abs(a - b) <= 1e-9 * std::max(a, 1.0), "rigid motion (line)");
    c.Expect(std::abs(pa - pb) <= 1e-9 * std::max(pa, 1.0), "rigid motion (plane)");
  }

  // Coordinate permutation.
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t dim = 2 + static_cast<std::size_t>(i % 3);
    const PointCloud cloud = testing::RandomCloud(rng, dim + 3, dim);
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto permute = [&](std::span<const double> v) {
      Vector out(dim);
      for (std::size_t k = 0; k < dim; ++k) out[k] = v[perm[k]];
      return out;
    };
    std::vector<Vector> swapped;
    for (const auto& p : cloud.points()) swapped.push_back(permute(p));
    const PointCloud sc(swapped);
    c.Expect(UpToSignDistance(permute(FitLine(cloud).direction), FitLine(sc).direction) <=
                 1e-12,
             "permutation (line)");
    c.Expect(UpToSignDistance(permute(FitHyperplane(cloud).normal),
                              FitHyperplane(sc).normal) <= 1e-12,
             "permutation (plane)");
  }

  // Residual orthogonality.
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t dim = 2 + static_cast<std::size_t>(i % 3);
    const PointCloud cloud = testing::RandomCloud(rng, dim + 5, dim);
    const auto line = FitLine(cloud);
    for (const auto& p : cloud.points()) {
      const Vector r = Subtract(p, line.anchor);
      const Vector foot = AddScaled(line.anchor, Dot(r, line.direction), line.direction);
      c.Expect(std::abs(Dot(Subtract(p, foot), line.direction)) <= 1e-10,
               "residual orthogonality");
    }
  }

  // Optimality against random candidate lines.
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    const PointCloud cloud = testing::RandomCloud(rng, n, 2);
    const double best = FitLine(cloud).error.sum_sq;
    bool ok = true;
    for (int k = 0; k < 2000 && ok; ++k) {
      const Vector anchor = {cloud[0][0] + 3 * g(rng), cloud[0][1] + 3 * g(rng)};
      const Vector dir = {g(rng), g(rng)};
      if (Norm(dir) < 1e-9) continue;
      ok = best <= testing::LineSumSq(cloud, anchor, dir) + 1e-12;
    }
    c.Expect(ok, "TLS optimality");
  }

  // Eigen trace and determinant.
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const auto m = testing::RandomSymmetric(rng, n);
    const auto e = EigenSymmetric(m);
    double trace = 0.0, sum = 0.0, prod = 1.0;
    for (std::size_t k = 0; k < n; ++k) trace += m(k, k);
    for (double v : e.eigenvalues) {
      sum += v;
      prod *= v;
    }
    const double det = testing::CofactorDeterminant(testing::ToMatrix(m));
    c.Expect(std::abs(sum - trace) <= 1e-9 * std::max(1.0, std::abs(trace)), "trace");
    c.Expect(std::abs(prod - det) <= 1e-8 * std::max(1.0, std::abs(det)), "determinant");
  }

  // Centroid incidence and scissors betweenness on Nievergelt-style samples.
  std::uniform_real_distribution<double> u(-10.0, 10.0), slope(-3.0, 3.0);
  for (int i = 0; i < kPropertyCases; ++i) {
    const int n = 3 + i % 10;
    const double k = slope(rng);
    std::vector<double> xs, ys;
    for (int j = 0; j < n; ++j) {
      xs.push_back(u(rng));
      ys.push_back(k * xs.back() + 0.5 * u(rng));
    }
    const auto r = CompareOlsTls(xs, ys);
    c.Expect(r.ols->Contains(r.centroid[0], r.centroid[1], 1e-10), "OLS incidence");
    c.Expect(r.conjugate->Contains(r.centroid[0], r.centroid[1], 1e-10),
             "conjugate incidence");
    c.Expect(DistancePointToLine(r.centroid, r.tls) <= 1e-10, "TLS incidence");
    c.Expect(r.tls_between_classical.value_or(false), "scissors betweenness");
  }
}

void BumblebeeRecovery(Check& c) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    synthetic::LineCloudSpec spec{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)},
                                  static_cast<std::size_t>(2 + i % 60), 0.0, rng()};
    const auto gen = synthetic::GenerateLineCloud(spec);
    const auto line = FitLine(gen.cloud);
    c.Expect(UpToSignDistance(line.direction, gen.true_direction) <= 1e-12,
             "noiseless direction");
    // Zero up to the rounding of the generated coordinates.
    const Vector centroid = Centroid(gen.cloud);
    double spread = 0.0;
    for (const auto& p : gen.cloud.points()) {
      const Vector r = Subtract(p, centroid);
      spread += Dot(r, r);
    }
    c.Expect(line.error.sum_sq <= 1e-24 * spread, "noiseless sum_sq");
  }

  const auto gen = synthetic::GenerateLineCloud({{0, 0, 0}, {10, 10, 10}, 50, 0.1, 42});
  const double angle =
      synthetic::UndirectedAngleDeg(FitLine(gen.cloud).direction, gen.true_direction);
  c.Expect(angle == kFrozenSeed42AngleDeg, "frozen seed-42 angle");

  double previous = INFINITY;
  for (std::size_t n : {10u, 100u, 1000u}) {
    std::vector<double> angles;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto g = synthetic::GenerateLineCloud({{0, 0, 0}, {10, 10, 10}, n, 0.1, seed});
      angles.push_back(
          synthetic::UndirectedAngleDeg(FitLine(g.cloud).direction, g.true_direction));
    }
    std::sort(angles.begin(), angles.end());
    const double median = 0.5 * (angles[49] + angles[50]);
    c.Expect(median < previous, "median angle decreases at n = " + std::to_string(n));
    previous = median;
  }
}

struct ProcessResult {
  int code;
  std::string out;
};

ProcessResult RunBinary(const std::string& args, const fs::path& out_file) {
  const std::string cmd = std::string(TLSFIT_CLI_PATH) + " " + args + " >" +
                          out_file.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream f(out_file, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, s.str()};
}

void CliContract(Check& c) {
  const fs::path dir = fs::temp_directory_path() / "tlsfit_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name, std::ios::binary) << text;
    return (dir / name).string();
  };
  const fs::path out = dir / "stdout";

  const auto good = write("good.csv", "x,y\n1,4\n3,2\n4,6\n5,8\n7,5\n");
  const std::pair<std::string, int> cases[] = {
      {"fit --input " + good + " --columns x,y", 0},
      {"fit --no-such-flag", 2},
      {"fit --input " + write("parse.csv", "x,y\n1,zz\n") + " --columns x,y", 3},
      {"fit --input " + good + " --columns x,q", 3},
      {"fit --input " + (dir / "missing.csv").string() + " --columns x,y", 3},
      {"fit --input " + write("flat.csv", "x,y\n2,2\n2,2\n") + " --columns x,y", 4},
      {"fit --input " +
           write("huge.csv", "x,y,z\n1e200,0,0\n-1e200,1,0\n0,1e200,1\n3,4,5\n") +
           " --columns x,y,z",
       5},
  };
  for (const auto& [args, expected] : cases) {
    const int code = RunBinary(args, out).code;
    c.Expect(code == expected, "exit " + std::to_string(code) + " != " +
                                   std::to_string(expected) + " for: " + args);
  }

  const std::vector<std::string> repeatable = {
      "fit --input builtin:v4 --where country=SK",
      "fit --input " + good + " --columns x,y --geometry line", "economy",
      "compare --input " + good};
  for (const std::string& args : repeatable) {
    const auto a = RunBinary(args, out);
    const auto b = RunBinary(args, out);
    c.Expect(a.code == 0 && !a.out.empty() && a.out == b.out, "byte-identical: " + args);
  }

  const auto dumped = RunBinary("dataset", out);
  c.Expect(dumped.code == 0, "dataset exit code");
  c.Expect(io::ParseIndicatorCsv(dumped.out) == economy::V4Dataset(),
           "CSV parses back to the builtin table");
  c.Expect(io::WriteIndicatorCsv(io::ParseIndicatorCsv(dumped.out)) == dumped.out,
           "CSV rewrites byte-identically");
  fs::remove_all(dir);
}

}  // namespace
}  // namespace tlsfit

int main() {
  using tlsfit::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "Nievergelt OLS line y = 0.45 x + 3.2", tlsfit::NievergeltOls},
      {2, "Nievergelt conjugate line x = 0.45 y + 1.75", tlsfit::NievergeltConjugate},
      {3, "Nievergelt TLS line y = x + 1, sum_sq 11, swap-invariant",
       tlsfit::NievergeltTls},
      {4, "V4 centroids", tlsfit::V4Centroids},
      {5, "V4 normals up to sign", tlsfit::V4Normals},
      {6, "V4 errors under the oracle-selected metric", tlsfit::V4Errors},
      {7, "property suite", tlsfit::PropertySuite},
      {8, "bumblebee recovery", tlsfit::BumblebeeRecovery},
      {9, "CLI contract", tlsfit::CliContract},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    tlsfit::Check check;
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = check.failures().empty();
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", crit.id, crit.title.c_str());
    const std::size_t shown = std::min<std::size_t>(check.failures().size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
      std::printf("    %s\n", check.failures()[i].c_str());
    }
    if (check.failures().size() > shown) {
      std::printf("    ... %zu more\n", check.failures().size() - shown);
    }
    failed += ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
