#pragma once

#include <span>
#include <string>
#include <vector>

namespace ncq {

struct PlotSeries {
  std::string label;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
};

// Minimal self-contained SVG line plot (no plotting dependency): one
// polyline per series, shared x axis, each series scaled to the full
// plot height with its own range printed in the legend.
void write_svg_plot(const std::string& path, const std::string& title,
                    std::span<const PlotSeries> series);

}  // namespace ncq
