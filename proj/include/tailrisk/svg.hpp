#pragma once

#include <string>
#include <vector>

namespace tailrisk::svg {

/// A polyline or scatter series. Line paths split at non-finite points, so
/// gappy data renders as disconnected segments instead of bogus bridges.
struct Series {
  enum class Kind { Line, Points };
  std::vector<double> x;
  std::vector<double> y;
  Kind kind = Kind::Line;
  std::string color = "#1f77b4";
  double size = 1.5;  ///< stroke width (Line) or marker radius (Points)
  bool dashed = false;
};

/// A shaded y-band (lo..hi) over x, drawn behind the series.
struct Band {
  std::vector<double> x;
  std::vector<double> lo;
  std::vector<double> hi;
  std::string color = "#1f77b4";
  double opacity = 0.25;
};

struct Figure {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Band> bands;
  std::vector<Series> series;
  int width = 720;
  int height = 480;
};

/// Render a self-contained SVG document. Output is deterministic: fixed
/// precision coordinates, no timestamps, no randomness.
std::string render_svg(const Figure& figure);

void write_svg(const std::string& path, const Figure& figure);

}  // namespace tailrisk::svg
