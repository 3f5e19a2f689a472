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

#include "tlsfit/io/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tlsfit/io/csv.hpp"
#include "tlsfit/io/report.hpp"
#include "tlsfit/io/svg.hpp"
#include "tlsfit/synthetic.hpp"

namespace tlsfit::io {

namespace {

namespace fs = std::filesystem;

// Raised for flag values CLI11 cannot check by itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string format = "json";
  bool plot = false;
  std::string output_dir;
  std::string delimiter = ",";
};

void AddCommon(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_flag("--plot", opts.plot, "Also write SVG plots");
  cmd->add_option("--output-dir", opts.output_dir,
                  "Directory for plots and scene files (default: $" +
                      std::string(kOutputDirEnv) + " or the current directory)");
}

char Delimiter(const std::string& s) {
  if (s == "\\t" || s == "tab") return '\t';
  if (s.size() != 1) throw UsageError("--delimiter must be a single character");
  return s[0];
}

OutputFormat Format(const CommonOptions& opts) {
  return *ParseOutputFormat(opts.format);
}

fs::path OutputDir(const CommonOptions& opts) {
  fs::path dir = ".";
  if (!opts.output_dir.empty()) {
    dir = opts.output_dir;
  } else if (const char* env = std::getenv(std::string(kOutputDirEnv).c_str());
             env != nullptr && *env != '\0') {
    dir = env;
  }
  fs::create_directories(dir);
  return dir;
}

void WriteFile(const fs::path& path, const std::string& contents,
               std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path.string() + "'");
  f << contents;
  err << "wrote " << path.string() << '\n';
}

std::array<std::size_t, 2> ParseProjection(const std::vector<std::size_t>& v) {
  if (v.size() != 2) throw UsageError("--projection takes exactly two axes");
  return {v[0], v[1]};
}

std::array<double, 3> ParseTriple(const std::vector<double>& v,
                                  const char* flag) {
  if (v.size() != 3) {
    throw UsageError(std::string(flag) + " takes three comma-separated numbers");
  }
  return {v[0], v[1], v[2]};
}

}  // namespace

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
    case ErrorKind::kSchemaError:
    case ErrorKind::kParseError:
      return kExitInput;
    case ErrorKind::kDegenerateGeometry:
      return kExitDegenerate;
    case ErrorKind::kNumericalFailure:
      return kExitNumerical;
  }
  return kExitInput;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Orthogonal regression (total least squares) of lines and "
               "planes, with a state-space view of national economies",
               std::string(kToolName)};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  // fit
  CommonOptions fit_opts;
  FitRequest fit_req;
  std::string fit_geometry = "plane";
  std::string fit_metric{ToString(kDefaultErrorMetric)};
  std::string fit_label;
  std::string fit_where;
  std::vector<std::size_t> fit_projection = {0, 1};
  auto* fit = app.add_subcommand("fit", "Fit a line or hyperplane to a point cloud");
  fit->add_option("--input", fit_req.input,
                  "CSV file with a header row, or builtin:v4")
      ->required();
  fit->add_option("--geometry", fit_geometry, "line or plane")
      ->check(CLI::IsMember({"line", "plane"}))
      ->capture_default_str();
  fit->add_option("--columns", fit_req.columns,
                  "Coordinate columns by name or 0-based index")
      ->delimiter(',');
  fit->add_option("--label", fit_label, "Column holding point labels");
  fit->add_option("--where", fit_where, "Keep rows with COLUMN=VALUE");
  fit->add_option("--delimiter", fit_opts.delimiter, "Field delimiter")
      ->capture_default_str();
  fit->add_option("--metric", fit_metric, "Reported error aggregate")
      ->check(CLI::IsMember({"sum_sq", "root_sum_sq", "rms", "sum_abs"}))
      ->capture_default_str();
  fit->add_option("--projection", fit_projection,
                  "Axes of the 2D plot projection")
      ->delimiter(',');
  AddCommon(fit, fit_opts);

  // compare
  CommonOptions cmp_opts;
  std::string cmp_input;
  std::vector<std::string> cmp_columns = {"0", "1"};
  auto* compare = app.add_subcommand(
      "compare", "Classical and conjugate regression lines versus orthogonal");
  compare->add_option("--input", cmp_input, "CSV file with a header row")
      ->required();
  compare->add_option("--columns", cmp_columns, "x and y columns")
      ->delimiter(',');
  compare->add_option("--delimiter", cmp_opts.delimiter, "Field delimiter")
      ->capture_default_str();
  AddCommon(compare, cmp_opts);

  // economy
  CommonOptions eco_opts;
  std::string eco_input{kBuiltinV4};
  std::vector<std::string> eco_countries;
  std::string eco_metric{ToString(kDefaultErrorMetric)};
  auto* eco = app.add_subcommand(
      "economy", "Economy planes, pairwise plane angles and plane slopes");
  eco->add_option("--input", eco_input,
                  "Indicator CSV (country,year,unemployment,gdp_change,"
                  "inflation) or builtin:v4")
      ->capture_default_str();
  eco->add_option("--country", eco_countries, "Restrict to these countries")
      ->delimiter(',');
  eco->add_option("--metric", eco_metric, "Reported error aggregate")
      ->check(CLI::IsMember({"sum_sq", "root_sum_sq", "rms", "sum_abs"}))
      ->capture_default_str();
  eco->add_option("--delimiter", eco_opts.delimiter, "Field delimiter")
      ->capture_default_str();
  AddCommon(eco, eco_opts);

  // gen-bumblebee
  std::vector<double> bee_from = {0.0, 0.0, 0.0};
  std::vector<double> bee_to = {10.0, 10.0, 10.0};
  std::size_t bee_n = 50;
  double bee_sigma = 0.1;
  std::uint64_t bee_seed = 42;
  std::string bee_output;
  auto* bee = app.add_subcommand(
      "gen-bumblebee", "Write noisy samples of a straight 3D flight as CSV");
  bee->add_option("--from", bee_from, "Start point x,y,z")->delimiter(',');
  bee->add_option("--to", bee_to, "End point x,y,z")->delimiter(',');
  bee->add_option("-n,--count", bee_n, "Number of samples")->capture_default_str();
  bee->add_option("--sigma", bee_sigma, "Isotropic noise deviation")
      ->capture_default_str();
  bee->add_option("--seed", bee_seed, "Generator seed")->capture_default_str();
  bee->add_option("--output", bee_output, "Output file (default: stdout)");

  auto* dataset = app.add_subcommand(
      "dataset", "Print the builtin V4 indicator table as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fit->parsed()) {
      fit_req.geometry = *ParseGeometry(fit_geometry);
      fit_req.error_metric = *ParseErrorMetric(fit_metric);
      fit_req.output_format = Format(fit_opts);
      fit_req.emit_plot = fit_opts.plot;
      fit_req.delimiter = Delimiter(fit_opts.delimiter);
      if (!fit_label.empty()) fit_req.label_column = fit_label;
      if (!fit_where.empty()) {
        const auto eq = fit_where.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw UsageError("--where expects COLUMN=VALUE");
        }
        fit_req.filter = RowFilter{fit_where.substr(0, eq), fit_where.substr(eq + 1)};
      }
      const auto projection = ParseProjection(fit_projection);
      if (fit_req.input != kBuiltinV4 && fit_req.columns.size() < 2) {
        throw UsageError("--columns needs at least two coordinate columns");
      }
      const FitResult result = RunFit(fit_req);
      if (fit_req.emit_plot) {
        std::vector<std::string> names = fit_req.columns;
        if (names.empty()) {
          names.assign(economy::kAxisNames.begin(), economy::kAxisNames.end());
        }
        const Chart chart =
            ChartFromFit(result.report, result.cloud, projection, names);
        WriteFile(OutputDir(fit_opts) / "fit.svg", RenderSvg(chart), err);
      }
      out << Render(result.report, fit_req.output_format);
      return kExitOk;
    }

    if (compare->parsed()) {
      if (cmp_columns.size() != 2) {
        throw UsageError("compare needs exactly two columns (x,y)");
      }
      const char delim = Delimiter(cmp_opts.delimiter);
      const PointCloud cloud =
          ParseCloudCsv(ReadInput(cmp_input), cmp_columns, std::nullopt, delim);
      std::vector<double> xs;
      std::vector<double> ys;
      for (const auto& p : cloud.points()) {
        xs.push_back(p[0]);
        ys.push_back(p[1]);
      }
      const ComparisonReport report = CompareOlsTls(xs, ys);
      if (cmp_opts.plot) {
        WriteFile(OutputDir(cmp_opts) / "compare.svg",
                  RenderSvg(ChartFromComparison(report, xs, ys)), err);
      }
      out << Render(report, Format(cmp_opts));
      return kExitOk;
    }

    if (eco->parsed()) {
      std::vector<economy::IndicatorSeries> data =
          eco_input == kBuiltinV4
              ? economy::V4Dataset()
              : ParseIndicatorCsv(ReadInput(eco_input), Delimiter(eco_opts.delimiter));
      if (!eco_countries.empty()) {
        std::vector<economy::IndicatorSeries> subset;
        for (const auto& c : eco_countries) {
          subset.push_back(economy::FindSeries(data, c));
        }
        data = std::move(subset);
      }
      const auto indicators =
          economy::ComputeIndicators(data, *ParseErrorMetric(eco_metric));
      if (eco_opts.plot) {
        const fs::path dir = OutputDir(eco_opts);
        for (std::size_t k = 0; k < economy::kAxisNames.size(); ++k) {
          WriteFile(dir / ("timeseries_" + std::string(economy::kAxisNames[k]) +
                           ".svg"),
                    RenderSvg(IndicatorTimeSeriesChart(data, k)), err);
        }
        for (std::size_t i = 0; i < data.size(); ++i) {
          WriteFile(dir / ("phase_" + data[i].country + ".svg"),
                    RenderSvg(PhaseProjectionChart(data[i], {0, 2})), err);
          WriteFile(dir / ("scene_" + data[i].country + ".json"),
                    DumpJson(SceneJson(indicators.planes[i],
                                       economy::Trajectory(data[i]))),
                    err);
        }
      }
      out << Render(indicators, Format(eco_opts));
      return kExitOk;
    }

    if (bee->parsed()) {
      synthetic::LineCloudSpec spec;
      spec.a = ParseTriple(bee_from, "--from");
      spec.b = ParseTriple(bee_to, "--to");
      spec.n = bee_n;
      spec.sigma = bee_sigma;
      spec.seed = bee_seed;
      const auto generated = synthetic::GenerateLineCloud(spec);
      std::ostringstream csv;
      csv << "index,x,y,z\n";
      for (std::size_t i = 0; i < generated.cloud.size(); ++i) {
        const auto& p = generated.cloud[i];
        csv << i << ',' << FormatNumber(p[0]) << ',' << FormatNumber(p[1]) << ','
            << FormatNumber(p[2]) << '\n';
      }
      if (bee_output.empty()) {
        out << csv.str();
      } else {
        WriteFile(bee_output, csv.str(), err);
      }
      return kExitOk;
    }

    if (dataset->parsed()) {
      out << WriteIndicatorCsv(economy::V4Dataset());
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << ToString(e.kind()) << "): " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace tlsfit::io
