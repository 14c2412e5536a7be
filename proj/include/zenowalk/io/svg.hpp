#pragma once

#include <string>
#include <utility>
#include <vector>

namespace zenowalk::io {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool dashed = false;
};

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Standalone SVG document (no external assets). Output depends only on the
/// plot contents.
std::string render_svg(const LinePlot& plot);

}  // namespace zenowalk::io
