#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "attsync/trajectory_io.hpp"

namespace attsync {

enum class PlotKind { States, V2, MaxNorm };

/// "states" | "v2" | "max_norm". Throws ContractViolation otherwise.
PlotKind parse_plot_kind(std::string_view name);
std::string to_string(PlotKind kind);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct Figure {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::optional<double> marker_y;  // dashed horizontal reference line
  std::string marker_label;
};

/// states: every coordinate x_{i,c} against t; v2: V2 against t; max_norm:
/// max_i |x_i| against t with a marker at pi. Throws ValidationError on an
/// empty table.
Figure make_figure(const TrajectoryTable& table, PlotKind kind);

std::string render_svg(const Figure& fig, int width = 800, int height = 500);

}  // namespace attsync
