#include "attsync/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "attsync/errors.hpp"

namespace attsync {

namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                                  "#bcbd22", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Ticks at 1, 2 or 5 times a power of ten.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0})
    if (m * mag >= raw) return m * mag;
  return 10.0 * mag;
}

}  // namespace

PlotKind parse_plot_kind(std::string_view name) {
  if (name == "states") return PlotKind::States;
  if (name == "v2") return PlotKind::V2;
  if (name == "max_norm") return PlotKind::MaxNorm;
  throw ContractViolation("unknown plot kind '" + std::string(name) +
                          "' (expected states, v2 or max_norm)");
}

std::string to_string(PlotKind kind) {
  switch (kind) {
    case PlotKind::States: return "states";
    case PlotKind::V2: return "v2";
    case PlotKind::MaxNorm: return "max_norm";
  }
  return "unknown";
}

Figure make_figure(const TrajectoryTable& table, PlotKind kind) {
  if (table.size() == 0) throw ValidationError("trajectory", "table has no rows");
  Figure fig;
  fig.x_label = "t [s]";
  switch (kind) {
    case PlotKind::States:
      fig.title = "Agent states";
      fig.y_label = "x_i [rad]";
      for (std::size_t i = 0; i < table.agents; ++i)
        for (int c = 0; c < 3; ++c) {
          Series s{"x_" + std::to_string(i + 1) + "_" + std::to_string(c + 1), table.times, {}};
          s.y.reserve(table.size());
          for (const auto& x : table.states) s.y.push_back(x[i][c]);
          fig.series.push_back(std::move(s));
        }
      break;
    case PlotKind::V2:
      fig.title = "V(x) = 1/2 x^T x";
      fig.y_label = "V";
      fig.series.push_back({"V2", table.times, table.v2});
      break;
    case PlotKind::MaxNorm:
      fig.title = "max_i |x_i|";
      fig.y_label = "max_i |x_i| [rad]";
      fig.series.push_back({"max_norm", table.times, table.max_norm});
      fig.marker_y = std::numbers::pi;
      fig.marker_label = "pi";
      break;
  }
  return fig;
}

std::string render_svg(const Figure& fig, int width, int height) {
  const double left = 70, right = 20, top = 40, bottom = 50;
  const double pw = width - left - right;
  const double ph = height - top - bottom;

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : fig.series) {
    for (double v : s.x) xmin = std::min(xmin, v), xmax = std::max(xmax, v);
    for (double v : s.y) ymin = std::min(ymin, v), ymax = std::max(ymax, v);
  }
  if (fig.marker_y) ymin = std::min(ymin, *fig.marker_y), ymax = std::max(ymax, *fig.marker_y);
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymin -= 0.5, ymax += 0.5;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"16\">" << escape(fig.title) << "</text>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"11\" stroke=\"#ddd\">\n";
  const double xs = nice_step(xmax - xmin, 8);
  for (double v = std::ceil(xmin / xs) * xs; v <= xmax + 1e-12; v += xs)
    svg << "<line x1=\"" << fmt(px(v)) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(px(v))
        << "\" y2=\"" << fmt(top + ph) << "\"/><text stroke=\"none\" fill=\"black\" x=\""
        << fmt(px(v)) << "\" y=\"" << fmt(top + ph + 16) << "\" text-anchor=\"middle\">"
        << tick_label(v) << "</text>\n";
  const double ys = nice_step(ymax - ymin, 6);
  for (double v = std::ceil(ymin / ys) * ys; v <= ymax + 1e-12; v += ys)
    svg << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(py(v)) << "\" x2=\"" << fmt(left + pw)
        << "\" y2=\"" << fmt(py(v)) << "\"/><text stroke=\"none\" fill=\"black\" x=\""
        << fmt(left - 6) << "\" y=\"" << fmt(py(v) + 4) << "\" text-anchor=\"end\">"
        << tick_label(v) << "</text>\n";
  svg << "</g>\n";

  svg << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(pw)
      << "\" height=\"" << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << fmt(left + pw / 2) << "\" y=\"" << height - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(fig.x_label) << "</text>\n";
  svg << "<text transform=\"translate(16," << fmt(top + ph / 2)
      << ") rotate(-90)\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(fig.y_label) << "</text>\n";

  for (std::size_t k = 0; k < fig.series.size(); ++k) {
    const auto& s = fig.series[k];
    svg << "<polyline class=\"series\" data-label=\"" << escape(s.label)
        << "\" fill=\"none\" stroke-width=\"1.5\" stroke=\"" << kPalette[k % kPalette.size()]
        << "\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i)
      svg << (i ? " " : "") << fmt(px(s.x[i])) << ',' << fmt(py(s.y[i]));
    svg << "\"/>\n";
  }

  if (fig.marker_y) {
    svg << "<line class=\"marker\" x1=\"" << fmt(left) << "\" y1=\"" << fmt(py(*fig.marker_y))
        << "\" x2=\"" << fmt(left + pw) << "\" y2=\"" << fmt(py(*fig.marker_y))
        << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n"
        << "<text x=\"" << fmt(left + pw - 4) << "\" y=\"" << fmt(py(*fig.marker_y) - 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
        << escape(fig.marker_label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace attsync
