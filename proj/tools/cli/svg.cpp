// Copyright 2026 The qudit-eet Authors
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

#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qeet::cli::svg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;
constexpr std::size_t kMaxColumns = 320;
constexpr std::size_t kMaxRows = 200;

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c",
                                              "#ff7f0e", "#9467bd", "#17becf"};

struct Range {
  double lo;
  double hi;

  double span() const { return hi - lo; }
};

Range range_of(const std::vector<double>& v) {
  Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (double x : v) {
    if (std::isfinite(x)) {
      r.lo = std::min(r.lo, x);
      r.hi = std::max(r.hi, x);
    }
  }
  if (!std::isfinite(r.lo)) {
    return {0.0, 1.0};
  }
  if (r.hi - r.lo <= 0.0) {
    const double pad = r.lo == 0.0 ? 1.0 : std::abs(r.lo) * 0.1;
    return {r.lo - pad, r.hi + pad};
  }
  return r;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '&':
      out += "&amp;";
      break;
    default:
      out += c;
    }
  }
  return out;
}

double px(double x, Range r) { return kLeft + (x - r.lo) / r.span() * kPlotW; }
double py(double y, Range r) { return kTop + kPlotH - (y - r.lo) / r.span() * kPlotH; }

void header(std::ostringstream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kLeft + kPlotW / 2 << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-size=\"15\">" << escape(title) << "</text>\n";
}

void axes(std::ostringstream& out, Range xr, Range yr, const std::string& x_label,
          const std::string& y_label) {
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW
      << "\" height=\"" << kPlotH << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = xr.lo + xr.span() * i / 5.0;
    const double yv = yr.lo + yr.span() * i / 5.0;
    const double x = px(xv, xr);
    const double y = py(yv, yr);
    out << "<line x1=\"" << num(x) << "\" y1=\"" << kTop + kPlotH << "\" x2=\"" << num(x)
        << "\" y2=\"" << kTop + kPlotH + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(x) << "\" y=\"" << kTop + kPlotH + 18
        << "\" text-anchor=\"middle\">" << tick(xv) << "</text>\n"
        << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(y) << "\" x2=\"" << kLeft
        << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\">" << tick(yv) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + kPlotW / 2 << "\" y=\"" << kHeight - 18
      << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n"
      << "<text x=\"20\" y=\"" << kTop + kPlotH / 2 << "\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 20 " << kTop + kPlotH / 2 << ")\">" << escape(y_label)
      << "</text>\n";
}

// Keeps the first, min, max and last point of every pixel column so the
// envelope of dense oscillations survives.
std::vector<std::pair<double, double>> decimate(const Series& s, Range xr) {
  std::vector<std::pair<double, double>> out;
  const std::size_t n = std::min(s.x.size(), s.y.size());
  if (n <= 4 * kMaxColumns) {
    for (std::size_t i = 0; i < n; ++i) {
      out.emplace_back(s.x[i], s.y[i]);
    }
    return out;
  }
  std::size_t i = 0;
  while (i < n) {
    const auto column = static_cast<long>((s.x[i] - xr.lo) / xr.span() * kMaxColumns);
    std::size_t lo = i;
    std::size_t hi = i;
    std::size_t j = i;
    while (j < n && static_cast<long>((s.x[j] - xr.lo) / xr.span() * kMaxColumns) == column) {
      if (s.y[j] < s.y[lo]) {
        lo = j;
      }
      if (s.y[j] > s.y[hi]) {
        hi = j;
      }
      ++j;
    }
    std::array<std::size_t, 4> keep{i, std::min(lo, hi), std::max(lo, hi), j - 1};
    std::size_t last = n;
    for (std::size_t k : keep) {
      if (k != last) {
        out.emplace_back(s.x[k], s.y[k]);
        last = k;
      }
    }
    i = j;
  }
  return out;
}

std::string colour(double t) {
  // Viridis anchor points.
  static constexpr std::array<std::array<double, 3>, 5> stops{{{68, 1, 84},
                                                               {59, 82, 139},
                                                               {33, 145, 140},
                                                               {94, 201, 98},
                                                               {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * (stops.size() - 1);
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(k);
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(stops[k][0] + f * (stops[k + 1][0] - stops[k][0]))),
                static_cast<int>(std::lround(stops[k][1] + f * (stops[k + 1][1] - stops[k][1]))),
                static_cast<int>(std::lround(stops[k][2] + f * (stops[k + 1][2] - stops[k][2]))));
  return buf;
}

} // namespace

std::string render(const LinePlot& plot) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& s : plot.series) {
    xs.insert(xs.end(), s.x.begin(), s.x.end());
    ys.insert(ys.end(), s.y.begin(), s.y.end());
  }
  const Range xr = range_of(xs);
  Range yr = range_of(ys);
  yr.lo = std::min(yr.lo, 0.0);

  std::ostringstream out;
  header(out, plot.title);
  axes(out, xr, yr, plot.x_label, plot.y_label);
  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    const char* stroke = kPalette[k % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : decimate(s, xr)) {
      out << num(px(x, xr)) << ',' << num(py(y, yr)) << ' ';
    }
    out << "\"/>\n";
    const double ly = kTop + 10 + 20.0 * static_cast<double>(k);
    out << "<line x1=\"" << kLeft + kPlotW + 15 << "\" y1=\"" << ly << "\" x2=\""
        << kLeft + kPlotW + 40 << "\" y2=\"" << ly << "\" stroke=\"" << stroke
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kLeft + kPlotW + 46 << "\" y=\"" << ly + 4 << "\">" << escape(s.name)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render(const Heatmap& map) {
  const std::size_t nx = map.x.size();
  const std::size_t ny = map.y.size();
  std::ostringstream out;
  header(out, map.title);
  if (nx == 0 || ny == 0 || map.values.size() != nx * ny) {
    out << "</svg>\n";
    return out.str();
  }
  const Range xr = range_of(map.x);
  const Range yr = range_of(map.y);
  const Range vr = range_of(map.values);
  const std::size_t cols = std::min(nx, kMaxColumns);
  const std::size_t rows = std::min(ny, kMaxRows);
  const double cw = kPlotW / static_cast<double>(cols);
  const double ch = kPlotH / static_cast<double>(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t y0 = r * ny / rows;
    const std::size_t y1 = std::max(y0 + 1, (r + 1) * ny / rows);
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t x0 = c * nx / cols;
      const std::size_t x1 = std::max(x0 + 1, (c + 1) * nx / cols);
      double v = -std::numeric_limits<double>::infinity();
      for (std::size_t j = y0; j < y1; ++j) {
        for (std::size_t i = x0; i < x1; ++i) {
          v = std::max(v, map.values[j * nx + i]);
        }
      }
      out << "<rect x=\"" << num(kLeft + cw * static_cast<double>(c)) << "\" y=\""
          << num(kTop + kPlotH - ch * static_cast<double>(r + 1)) << "\" width=\""
          << num(cw + 0.3) << "\" height=\"" << num(ch + 0.3) << "\" fill=\""
          << colour((v - vr.lo) / vr.span()) << "\"/>\n";
    }
  }
  axes(out, xr, yr, map.x_label, map.y_label);
  for (int i = 0; i < 50; ++i) {
    out << "<rect x=\"" << kLeft + kPlotW + 20 << "\" y=\""
        << num(kTop + kPlotH - kPlotH * (i + 1) / 50.0) << "\" width=\"20\" height=\""
        << num(kPlotH / 50.0 + 0.3) << "\" fill=\"" << colour((i + 0.5) / 50.0) << "\"/>\n";
  }
  out << "<text x=\"" << kLeft + kPlotW + 46 << "\" y=\"" << kTop + 8 << "\">" << tick(vr.hi)
      << "</text>\n<text x=\"" << kLeft + kPlotW + 46 << "\" y=\"" << kTop + kPlotH << "\">"
      << tick(vr.lo) << "</text>\n</svg>\n";
  return out.str();
}

} // namespace qeet::cli::svg
