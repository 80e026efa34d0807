#include "tailrisk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "tailrisk/errors.hpp"

namespace tailrisk::svg {

namespace {

constexpr int kMarginLeft = 72;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 56;

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string escape_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v, bool log_scale) {
    if (!std::isfinite(v)) return;
    if (log_scale && !(v > 0.0)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  void finalize(bool log_scale) {
    if (!(lo <= hi)) {  // nothing plottable: fall back to a unit range
      lo = log_scale ? 1.0 : 0.0;
      hi = log_scale ? 10.0 : 1.0;
    }
    if (log_scale) {
      lo = std::log10(lo);
      hi = std::log10(hi);
    }
    if (hi - lo < 1e-12) {  // degenerate span: pad so the point is visible
      const double pad = std::max(0.5, std::abs(lo) * 0.05);
      lo -= pad;
      hi += pad;
    }
  }
};

// largest "nice" step (1/2/5 times a power of ten) giving <= ~6 intervals
double nice_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  double nice = 10.0;
  if (frac <= 1.0)
    nice = 1.0;
  else if (frac <= 2.0)
    nice = 2.0;
  else if (frac <= 5.0)
    nice = 5.0;
  return nice * mag;
}

std::vector<double> ticks_linear(double lo, double hi) {
  const double step = nice_step(hi - lo);
  std::vector<double> ticks;
  double t = std::ceil(lo / step) * step;
  for (; t <= hi + 0.5 * step; t += step) {
    if (std::abs(t) < 1e-12 * step) t = 0.0;
    if (t >= lo - 1e-9 * step && t <= hi + 1e-9 * step) ticks.push_back(t);
  }
  return ticks;
}

// decade ticks for a log10-transformed axis; falls back to linear ticks in
// transformed space when the span is under one decade
std::vector<double> ticks_log(double lo, double hi) {
  std::vector<double> ticks;
  for (double k = std::ceil(lo); k <= std::floor(hi) + 1e-9; k += 1.0) ticks.push_back(k);
  if (ticks.size() >= 2) return ticks;
  return ticks_linear(lo, hi);
}

std::string tick_label(double value, bool log_scale) {
  const double shown = log_scale ? std::pow(10.0, value) : value;
  return fmt(shown, "%.6g");
}

class Mapper {
 public:
  Mapper(const Range& rx, const Range& ry, int width, int height)
      : rx_(rx), ry_(ry), x1_(kMarginLeft), x2_(width - kMarginRight),
        y1_(height - kMarginBottom), y2_(kMarginTop) {}

  double px(double v) const {
    return x1_ + (v - rx_.lo) / (rx_.hi - rx_.lo) * (x2_ - x1_);
  }
  double py(double v) const {
    return y1_ + (v - ry_.lo) / (ry_.hi - ry_.lo) * (y2_ - y1_);
  }

 private:
  Range rx_, ry_;
  double x1_, x2_, y1_, y2_;
};

// transform a raw data value onto the (possibly log) axis; NaN when it
// cannot be shown
double axis_value(double v, bool log_scale) {
  if (!std::isfinite(v)) return std::numeric_limits<double>::quiet_NaN();
  if (!log_scale) return v;
  if (!(v > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::log10(v);
}

}  // namespace

std::string render_svg(const Figure& figure) {
  Range rx, ry;
  for (const Band& band : figure.bands) {
    for (double v : band.x) rx.add(v, figure.log_x);
    for (double v : band.lo) ry.add(v, figure.log_y);
    for (double v : band.hi) ry.add(v, figure.log_y);
  }
  for (const Series& s : figure.series) {
    for (double v : s.x) rx.add(v, figure.log_x);
    for (double v : s.y) ry.add(v, figure.log_y);
  }
  rx.finalize(figure.log_x);
  ry.finalize(figure.log_y);
  const Mapper map(rx, ry, figure.width, figure.height);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << figure.width
      << "\" height=\"" << figure.height << "\" viewBox=\"0 0 " << figure.width << " "
      << figure.height << "\">\n";
  out << "<rect width=\"" << figure.width << "\" height=\"" << figure.height
      << "\" fill=\"#ffffff\"/>\n";

  const double px1 = kMarginLeft;
  const double px2 = figure.width - kMarginRight;
  const double py1 = figure.height - kMarginBottom;
  const double py2 = kMarginTop;

  // grid + tick labels
  const std::vector<double> xticks =
      figure.log_x ? ticks_log(rx.lo, rx.hi) : ticks_linear(rx.lo, rx.hi);
  const std::vector<double> yticks =
      figure.log_y ? ticks_log(ry.lo, ry.hi) : ticks_linear(ry.lo, ry.hi);
  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (double t : xticks)
    out << "<line x1=\"" << fmt(map.px(t)) << "\" y1=\"" << fmt(py1) << "\" x2=\""
        << fmt(map.px(t)) << "\" y2=\"" << fmt(py2) << "\"/>\n";
  for (double t : yticks)
    out << "<line x1=\"" << fmt(px1) << "\" y1=\"" << fmt(map.py(t)) << "\" x2=\""
        << fmt(px2) << "\" y2=\"" << fmt(map.py(t)) << "\"/>\n";
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
  for (double t : xticks)
    out << "<text x=\"" << fmt(map.px(t)) << "\" y=\"" << fmt(py1 + 16)
        << "\" text-anchor=\"middle\">" << tick_label(t, figure.log_x) << "</text>\n";
  for (double t : yticks)
    out << "<text x=\"" << fmt(px1 - 6) << "\" y=\"" << fmt(map.py(t) + 4)
        << "\" text-anchor=\"end\">" << tick_label(t, figure.log_y) << "</text>\n";
  out << "</g>\n";

  // clip plotted geometry to the axes box
  out << "<clipPath id=\"plot\"><rect x=\"" << fmt(px1) << "\" y=\"" << fmt(py2)
      << "\" width=\"" << fmt(px2 - px1) << "\" height=\"" << fmt(py1 - py2)
      << "\"/></clipPath>\n";
  out << "<g clip-path=\"url(#plot)\">\n";

  for (const Band& band : figure.bands) {
    std::string upper, lower;
    for (std::size_t i = 0; i < band.x.size(); ++i) {
      const double x = axis_value(band.x[i], figure.log_x);
      const double lo = axis_value(band.lo[i], figure.log_y);
      const double hi = axis_value(band.hi[i], figure.log_y);
      if (std::isnan(x) || std::isnan(lo) || std::isnan(hi)) continue;
      upper += fmt(map.px(x)) + "," + fmt(map.py(hi)) + " ";
      lower = fmt(map.px(x)) + "," + fmt(map.py(lo)) + " " + lower;
    }
    if (upper.empty()) continue;
    out << "<polygon points=\"" << upper << lower << "\" fill=\"" << band.color
        << "\" fill-opacity=\"" << fmt(band.opacity) << "\" stroke=\"none\"/>\n";
  }

  for (const Series& s : figure.series) {
    const std::size_t n = std::min(s.x.size(), s.y.size());
    if (s.kind == Series::Kind::Points) {
      out << "<g fill=\"" << s.color << "\">\n";
      for (std::size_t i = 0; i < n; ++i) {
        const double x = axis_value(s.x[i], figure.log_x);
        const double y = axis_value(s.y[i], figure.log_y);
        if (std::isnan(x) || std::isnan(y)) continue;
        out << "<circle cx=\"" << fmt(map.px(x)) << "\" cy=\"" << fmt(map.py(y))
            << "\" r=\"" << fmt(s.size) << "\"/>\n";
      }
      out << "</g>\n";
      continue;
    }
    // polyline, split wherever a coordinate is unplottable
    std::string path;
    bool pen_down = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = axis_value(s.x[i], figure.log_x);
      const double y = axis_value(s.y[i], figure.log_y);
      if (std::isnan(x) || std::isnan(y)) {
        pen_down = false;
        continue;
      }
      path += (pen_down ? "L" : "M") + fmt(map.px(x)) + " " + fmt(map.py(y));
      pen_down = true;
    }
    if (path.empty()) continue;
    out << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"" << fmt(s.size) << "\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << "/>\n";
  }
  out << "</g>\n";

  out << "<rect x=\"" << fmt(px1) << "\" y=\"" << fmt(py2) << "\" width=\""
      << fmt(px2 - px1) << "\" height=\"" << fmt(py1 - py2)
      << "\" fill=\"none\" stroke=\"#333333\"/>\n";

  out << "<g font-family=\"sans-serif\" fill=\"#111111\">\n";
  if (!figure.title.empty())
    out << "<text x=\"" << fmt(0.5 * (px1 + px2)) << "\" y=\"24\" font-size=\"14\" "
        << "text-anchor=\"middle\">" << escape_text(figure.title) << "</text>\n";
  if (!figure.x_label.empty())
    out << "<text x=\"" << fmt(0.5 * (px1 + px2)) << "\" y=\""
        << fmt(figure.height - 14.0) << "\" font-size=\"12\" text-anchor=\"middle\">"
        << escape_text(figure.x_label) << "</text>\n";
  if (!figure.y_label.empty())
    out << "<text x=\"18\" y=\"" << fmt(0.5 * (py1 + py2))
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << fmt(0.5 * (py1 + py2)) << ")\">" << escape_text(figure.y_label) << "</text>\n";
  out << "</g>\n";

  out << "</svg>\n";
  return out.str();
}

void write_svg(const std::string& path, const Figure& figure) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("svg: cannot open " + path + " for writing");
  out << render_svg(figure);
  if (!out) throw DataError("svg: failed writing " + path);
}

}  // namespace tailrisk::svg
