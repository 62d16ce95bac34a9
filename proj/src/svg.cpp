#include "cohkey/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "cohkey/errors.hpp"
#include "cohkey/numfmt.hpp"

namespace cohkey {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 630.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 550.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
constexpr std::size_t kPaletteSize = sizeof kPalette / sizeof kPalette[0];

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double nice_number(double range, bool round_down) {
  double exp = std::floor(std::log10(range));
  double frac = range / std::pow(10.0, exp);
  double nice;
  if (round_down)
    nice = frac < 1.5 ? 1.0 : frac < 3.0 ? 2.0 : frac < 7.0 ? 5.0 : 10.0;
  else
    nice = frac <= 1.0 ? 1.0 : frac <= 2.0 ? 2.0 : frac <= 5.0 ? 5.0 : 10.0;
  return nice * std::pow(10.0, exp);
}

struct Axis {
  double lo;
  double hi;
  double step;
};

Axis nice_axis(double lo, double hi) {
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  double step = nice_number((hi - lo) / 5.0, true);
  Axis a;
  a.step = step;
  a.lo = std::floor(lo / step) * step;
  a.hi = std::ceil(hi / step) * step;
  return a;
}

}  // namespace

std::string emit_line_chart(const CsvTable& data, const std::string& title) {
  if (data.rows.size() < 2) throw EmptyData("emit_line_chart: need at least 2 rows");
  if (data.header.size() < 2) throw EmptyData("emit_line_chart: need at least 2 columns");
  for (const std::vector<double>& row : data.rows)
    if (row.size() != data.header.size())
      throw DimensionMismatch("emit_line_chart: ragged row");

  double xmin = data.rows[0][0];
  double xmax = xmin;
  double ymin = data.rows[0][1];
  double ymax = ymin;
  for (const std::vector<double>& row : data.rows) {
    xmin = std::min(xmin, row[0]);
    xmax = std::max(xmax, row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      ymin = std::min(ymin, row[c]);
      ymax = std::max(ymax, row[c]);
    }
  }
  Axis xa = nice_axis(xmin, xmax);
  Axis ya = nice_axis(ymin, ymax);

  auto px = [&](double x) { return kLeft + (x - xa.lo) / (xa.hi - xa.lo) * (kRight - kLeft); };
  auto py = [&](double y) { return kBottom - (y - ya.lo) / (ya.hi - ya.lo) * (kBottom - kTop); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n";
  out += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"18\">" + title + "</text>\n";

  // Grid, ticks, labels.
  int xticks = static_cast<int>(std::round((xa.hi - xa.lo) / xa.step));
  int yticks = static_cast<int>(std::round((ya.hi - ya.lo) / ya.step));
  for (int t = 0; t <= xticks; ++t) {
    double x = xa.lo + t * xa.step;
    std::string sx = coord(px(x));
    out += "<line x1=\"" + sx + "\" y1=\"" + coord(kTop) + "\" x2=\"" + sx + "\" y2=\"" +
           coord(kBottom) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + sx + "\" y=\"" + coord(kBottom + 20.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           format_sig9(x) + "</text>\n";
  }
  for (int t = 0; t <= yticks; ++t) {
    double y = ya.lo + t * ya.step;
    std::string sy = coord(py(y));
    out += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + sy + "\" x2=\"" + coord(kRight) +
           "\" y2=\"" + sy + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + coord(kLeft - 8.0) + "\" y=\"" + coord(py(y) + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
           format_sig9(y) + "</text>\n";
  }
  out += "<rect x=\"" + coord(kLeft) + "\" y=\"" + coord(kTop) + "\" width=\"" +
         coord(kRight - kLeft) + "\" height=\"" + coord(kBottom - kTop) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<text x=\"" + coord((kLeft + kRight) / 2.0) + "\" y=\"" + coord(kBottom + 40.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
         data.header[0] + "</text>\n";

  // Series.
  for (std::size_t c = 1; c < data.header.size(); ++c) {
    const char* color = kPalette[(c - 1) % kPaletteSize];
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"2\" points=\"";
    for (std::size_t r = 0; r < data.rows.size(); ++r) {
      if (r) out += ' ';
      out += coord(px(data.rows[r][0])) + "," + coord(py(data.rows[r][c]));
    }
    out += "\"/>\n";
  }

  // Legend.
  for (std::size_t c = 1; c < data.header.size(); ++c) {
    const char* color = kPalette[(c - 1) % kPaletteSize];
    double ly = kTop + 10.0 + 22.0 * static_cast<double>(c - 1);
    out += "<line x1=\"650\" y1=\"" + coord(ly) + "\" x2=\"678\" y2=\"" + coord(ly) +
           "\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"684\" y=\"" + coord(ly + 4.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" + data.header[c] + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace cohkey
