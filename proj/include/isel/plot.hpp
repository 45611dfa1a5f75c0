#pragma once

#include "isel/experiment.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace isel {

struct SeriesPoint {
  Index x = 0;
  Rational mean_ratio;
  int instances = 0;
};

struct PlotSeries {
  SolverKind solver = SolverKind::Exhaustive;
  std::vector<SeriesPoint> points;  // sorted by x
};

/// Mean-ratio-vs-sweep-value series for one swept parameter.
struct PlotData {
  std::string sweep_param;
  std::vector<PlotSeries> series;
};

/// Groups a result CSV by swept parameter and solver; ratios are recomputed
/// exactly from the support/optimum columns. Malformed or empty CSV bodies
/// raise ParseError.
std::vector<PlotData> plot_data_from_csv(std::istream& csv);

std::string render_svg(const PlotData& data);

/// One SVG per swept parameter in the CSV; returns the written paths
/// ("<prefix>_<param>.svg").
std::vector<std::string> emit_plots(const std::string& csv_path,
                                    const std::string& out_prefix);

}  // namespace isel
