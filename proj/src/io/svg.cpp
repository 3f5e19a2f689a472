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

#include "tlsfit/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include "tlsfit/error.hpp"

namespace tlsfit::io {

namespace {

constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string Coord(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Heckbert's "nice number": 1, 2, 5 or 10 times a power of ten.
double NiceNumber(double x, bool round) {
  const double exponent = std::floor(std::log10(x));
  const double fraction = x / std::pow(10.0, exponent);
  double nice;
  if (round) {
    nice = fraction < 1.5 ? 1.0 : fraction < 3.0 ? 2.0 : fraction < 7.0 ? 5.0 : 10.0;
  } else {
    nice = fraction <= 1.0 ? 1.0 : fraction <= 2.0 ? 2.0 : fraction <= 5.0 ? 5.0 : 10.0;
  }
  return nice * std::pow(10.0, exponent);
}

std::string TickLabel(double value, double step) {
  const int decimals =
      std::max(0, static_cast<int>(-std::floor(std::log10(step) + 1e-9)));
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') {
    s.erase(0, 1);
  }
  return s;
}

// Clips the unbounded line to the box; nullopt when it misses.
std::optional<std::array<Point2, 2>> ClipLine(const ChartLine& line, double x0,
                                              double x1, double y0, double y1) {
  double tmin = -std::numeric_limits<double>::infinity();
  double tmax = std::numeric_limits<double>::infinity();
  const std::array<double, 2> lo = {x0, y0};
  const std::array<double, 2> hi = {x1, y1};
  for (int k = 0; k < 2; ++k) {
    const double a = line.anchor[k];
    const double d = line.direction[k];
    if (d == 0.0) {
      if (a < lo[k] || a > hi[k]) return std::nullopt;
      continue;
    }
    double t0 = (lo[k] - a) / d;
    double t1 = (hi[k] - a) / d;
    if (t0 > t1) std::swap(t0, t1);
    tmin = std::max(tmin, t0);
    tmax = std::min(tmax, t1);
  }
  if (!(tmin < tmax)) return std::nullopt;
  return std::array<Point2, 2>{
      Point2{line.anchor[0] + tmin * line.direction[0],
             line.anchor[1] + tmin * line.direction[1]},
      Point2{line.anchor[0] + tmax * line.direction[0],
             line.anchor[1] + tmax * line.direction[1]}};
}

ChartLine LineFromAffine(const std::string& name, const AffineLine2D& l) {
  if (l.orientation == LineOrientation::kYOnX) {
    return {name, {0.0, l.intercept}, {1.0, l.slope}};
  }
  return {name, {l.intercept, 0.0}, {l.slope, 1.0}};
}

}  // namespace

std::vector<double> NiceTicks(double lo, double hi, int target_count) {
  if (!(hi > lo)) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    lo -= pad;
    hi += pad;
  }
  const double range = NiceNumber(hi - lo, false);
  const double step = NiceNumber(range / std::max(1, target_count - 1), true);
  const double first = std::floor(lo / step);
  const double last = std::ceil(hi / step);
  std::vector<double> ticks;
  for (double i = first; i <= last + 0.5; i += 1.0) {
    double t = i * step;
    if (std::abs(t) < step * 1e-9) t = 0.0;
    ticks.push_back(t);
  }
  return ticks;
}

std::string RenderSvg(const Chart& chart) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  std::size_t count = 0;
  for (const auto& s : chart.series) {
    for (const auto& p : s.points) {
      xmin = std::min(xmin, p[0]);
      xmax = std::max(xmax, p[0]);
      ymin = std::min(ymin, p[1]);
      ymax = std::max(ymax, p[1]);
      ++count;
    }
  }
  if (count == 0) throw InvalidInput("nothing to plot: the chart has no points");

  const auto xt = NiceTicks(xmin, xmax);
  const auto yt = NiceTicks(ymin, ymax);
  const double x0 = xt.front(), x1 = xt.back();
  const double y0 = yt.front(), y1 = yt.back();
  const double pw = kSvgWidth - kLeft - kRight;
  const double ph = kSvgHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgWidth
      << "\" height=\"" << kSvgHeight << "\" viewBox=\"0 0 " << kSvgWidth << ' '
      << kSvgHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kSvgWidth << "\" height=\""
      << kSvgHeight << "\" fill=\"white\"/>\n";
  out << "<text class=\"title\" x=\"" << Coord(kSvgWidth / 2.0)
      << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
      << Escape(chart.title) << "</text>\n";

  out << "<g class=\"axes\" stroke=\"#444\">\n";
  out << "<rect class=\"frame\" x=\"" << Coord(kLeft) << "\" y=\"" << Coord(kTop)
      << "\" width=\"" << Coord(pw) << "\" height=\"" << Coord(ph)
      << "\" fill=\"none\"/>\n";
  const double xstep = xt.size() > 1 ? xt[1] - xt[0] : 1.0;
  const double ystep = yt.size() > 1 ? yt[1] - yt[0] : 1.0;
  for (double t : xt) {
    out << "<path class=\"tick\" d=\"M" << Coord(sx(t)) << ' '
        << Coord(kTop + ph) << " v6\"/>\n";
    out << "<text class=\"tick-label\" x=\"" << Coord(sx(t)) << "\" y=\""
        << Coord(kTop + ph + 20) << "\" text-anchor=\"middle\" stroke=\"none\">"
        << TickLabel(t, xstep) << "</text>\n";
  }
  for (double t : yt) {
    out << "<path class=\"tick\" d=\"M" << Coord(kLeft) << ' ' << Coord(sy(t))
        << " h-6\"/>\n";
    out << "<text class=\"tick-label\" x=\"" << Coord(kLeft - 10) << "\" y=\""
        << Coord(sy(t) + 4) << "\" text-anchor=\"end\" stroke=\"none\">"
        << TickLabel(t, ystep) << "</text>\n";
  }
  out << "</g>\n";
  out << "<text class=\"axis-label\" x=\"" << Coord(kLeft + pw / 2) << "\" y=\""
      << Coord(kSvgHeight - 15.0) << "\" text-anchor=\"middle\">"
      << Escape(chart.x_label) << "</text>\n";
  out << "<text class=\"axis-label\" transform=\"translate(20 "
      << Coord(kTop + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << Escape(chart.y_label) << "</text>\n";

  std::size_t color = 0;
  std::size_t legend_row = 0;
  auto legend = [&](const std::string& name, const char* stroke) {
    if (name.empty()) return;
    const double y = kTop + 16.0 + 16.0 * static_cast<double>(legend_row++);
    out << "<text class=\"legend\" x=\"" << Coord(kLeft + pw - 8) << "\" y=\""
        << Coord(y) << "\" text-anchor=\"end\" fill=\"" << stroke << "\">"
        << Escape(name) << "</text>\n";
  };

  for (const auto& s : chart.series) {
    const char* fill = kPalette[color++ % kPalette.size()];
    if (s.connect && s.points.size() > 1) {
      out << "<polyline class=\"series\" fill=\"none\" stroke=\"" << fill
          << "\" points=\"";
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (i) out << ' ';
        out << Coord(sx(s.points[i][0])) << ',' << Coord(sy(s.points[i][1]));
      }
      out << "\"/>\n";
    }
    for (const auto& p : s.points) {
      out << "<circle class=\"point\" cx=\"" << Coord(sx(p[0])) << "\" cy=\""
          << Coord(sy(p[1])) << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
    }
    legend(s.name, fill);
  }

  for (const auto& line : chart.lines) {
    const char* stroke = kPalette[color++ % kPalette.size()];
    const auto seg = ClipLine(line, x0, x1, y0, y1);
    if (!seg) continue;
    out << "<line class=\"model\" x1=\"" << Coord(sx((*seg)[0][0])) << "\" y1=\""
        << Coord(sy((*seg)[0][1])) << "\" x2=\"" << Coord(sx((*seg)[1][0]))
        << "\" y2=\"" << Coord(sy((*seg)[1][1])) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"2\"/>\n";
    legend(line.name, stroke);
  }

  out << "</svg>\n";
  return out.str();
}

Chart ChartFromFit(const FitReport& report, const PointCloud& cloud,
                   std::array<std::size_t, 2> axes,
                   std::span<const std::string> axis_names) {
  const std::size_t dim = cloud.dim();
  if (axes[0] >= dim || axes[1] >= dim || axes[0] == axes[1]) {
    throw InvalidInput("plot projection needs two distinct axes below " +
                       std::to_string(dim));
  }
  auto name = [&](std::size_t k) {
    return k < axis_names.size() ? axis_names[k] : "x" + std::to_string(k);
  };

  Chart chart;
  chart.title = "Orthogonal regression " + std::string(ToString(report.geometry())) +
                " fit: " + report.input;
  chart.x_label = name(axes[0]);
  chart.y_label = name(axes[1]);
  ChartSeries data{"data", {}, false};
  for (const auto& p : cloud.points()) {
    data.points.push_back({p[axes[0]], p[axes[1]]});
  }
  chart.series.push_back(std::move(data));

  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FittedLine>) {
          const Point2 d{m.direction[axes[0]], m.direction[axes[1]]};
          if (std::hypot(d[0], d[1]) > 1e-12) {
            chart.lines.push_back(
                {"orthogonal line", {m.anchor[axes[0]], m.anchor[axes[1]]}, d});
          }
        } else if (dim == 2) {
          chart.lines.push_back({"orthogonal line",
                                 {m.centroid[0], m.centroid[1]},
                                 {-m.normal[1], m.normal[0]}});
        } else {
          chart.series.push_back(
              {"centroid", {{m.centroid[axes[0]], m.centroid[axes[1]]}}, false});
        }
      },
      report.model);
  return chart;
}

Chart ChartFromComparison(const ComparisonReport& report,
                          std::span<const double> xs,
                          std::span<const double> ys) {
  Chart chart;
  chart.title = "Classical versus orthogonal regression";
  chart.x_label = "x";
  chart.y_label = "y";
  ChartSeries data{"data", {}, false};
  for (std::size_t i = 0; i < xs.size(); ++i) data.points.push_back({xs[i], ys[i]});
  chart.series.push_back(std::move(data));
  if (report.ols) chart.lines.push_back(LineFromAffine("y on x", *report.ols));
  if (report.conjugate) {
    chart.lines.push_back(LineFromAffine("x on y", *report.conjugate));
  }
  chart.lines.push_back({"orthogonal",
                         {report.tls.anchor[0], report.tls.anchor[1]},
                         {report.tls.direction[0], report.tls.direction[1]}});
  return chart;
}

Chart IndicatorTimeSeriesChart(std::span<const economy::IndicatorSeries> data,
                               std::size_t indicator) {
  if (indicator >= economy::kAxisNames.size()) {
    throw InvalidInput("indicator index out of range");
  }
  Chart chart;
  chart.title = std::string(economy::kAxisNames[indicator]) + " by year";
  chart.x_label = "year";
  chart.y_label = std::string(economy::kAxisNames[indicator]) + " (%)";
  for (const auto& s : data) {
    s.Validate();
    const auto& column = indicator == 0   ? s.unemployment
                         : indicator == 1 ? s.gdp_change
                                          : s.inflation;
    ChartSeries series{s.country, {}, true};
    for (std::size_t i = 0; i < s.years.size(); ++i) {
      series.points.push_back({static_cast<double>(s.years[i]), column[i]});
    }
    chart.series.push_back(std::move(series));
  }
  return chart;
}

Chart PhaseProjectionChart(const economy::IndicatorSeries& series,
                           std::array<std::size_t, 2> axes) {
  const PointCloud cloud = economy::Trajectory(series);
  if (axes[0] >= 3 || axes[1] >= 3 || axes[0] == axes[1]) {
    throw InvalidInput("phase projection needs two distinct axes below 3");
  }
  Chart chart;
  chart.title = series.country + " phase trajectory";
  chart.x_label = std::string(economy::kAxisNames[axes[0]]);
  chart.y_label = std::string(economy::kAxisNames[axes[1]]);
  ChartSeries s{series.country, {}, true};
  for (const auto& p : cloud.points()) s.points.push_back({p[axes[0]], p[axes[1]]});
  chart.series.push_back(std::move(s));
  return chart;
}

}  // namespace tlsfit::io
