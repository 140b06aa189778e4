#include "ncq/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "ncq/csv.hpp"
#include "ncq/errors.hpp"

namespace ncq {

namespace {

struct Range {
  double lo = 0.0, hi = 1.0;
  double clamp01(double v) const {
    if (hi == lo) return 0.5;
    return (v - lo) / (hi - lo);
  }
};

Range series_range(const std::vector<double>& v) {
  Range r{v.front(), v.front()};
  for (double x : v) {
    r.lo = std::min(r.lo, x);
    r.hi = std::max(r.hi, x);
  }
  return r;
}

}  // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    std::span<const PlotSeries> series) {
  constexpr double W = 800, H = 500;
  constexpr double ML = 60, MR = 20, MT = 40, MB = 40;
  const double plot_w = W - ML - MR;
  const double plot_h = H - MT - MB;

  std::ofstream out(path);
  if (!out) fail(ErrKind::invalid_argument, "cannot open output file: " + path);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";
  out << "<rect x=\"" << ML << "\" y=\"" << MT << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  if (series.empty() || series[0].x.empty()) {
    out << "</svg>\n";
    return;
  }

  Range x_range = series_range(series[0].x);
  for (const PlotSeries& s : series) {
    const Range r = series_range(s.x);
    x_range.lo = std::min(x_range.lo, r.lo);
    x_range.hi = std::max(x_range.hi, r.hi);
  }

  double legend_y = MT + 16;
  for (const PlotSeries& s : series) {
    if (s.x.empty() || s.x.size() != s.y.size()) continue;
    const Range y_range = series_range(s.y);
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double px = ML + plot_w * x_range.clamp01(s.x[i]);
      const double py = MT + plot_h * (1.0 - y_range.clamp01(s.y[i]));
      out << px << ',' << py << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << ML + 8 << "\" y=\"" << legend_y
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << s.color
        << "\">" << s.label << " [" << format_double(y_range.lo) << ", "
        << format_double(y_range.hi) << "]</text>\n";
    legend_y += 16;
  }

  out << "<text x=\"" << ML << "\" y=\"" << H - 12
      << "\" font-family=\"sans-serif\" font-size=\"12\">"
      << format_double(x_range.lo) << "</text>\n";
  out << "<text x=\"" << W - MR << "\" y=\"" << H - 12
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
      << format_double(x_range.hi) << "</text>\n";
  out << "</svg>\n";
}

}  // namespace ncq
