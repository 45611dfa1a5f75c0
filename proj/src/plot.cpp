#include "isel/plot.hpp"

#include "isel/io.hpp"
#include "isel/rational_text.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace isel {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

long long parse_ll(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad CSV field for ") + what + ": " + s);
  }
}

std::string format_coord(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

const char* series_color(SolverKind kind) {
  switch (kind) {
    case SolverKind::Exhaustive:
      return "#444444";
    case SolverKind::Greedy:
      return "#C44E52";
    case SolverKind::BestSingleIssue:
      return "#4C72B0";
  }
  return "#000000";
}

}  // namespace

std::vector<PlotData> plot_data_from_csv(std::istream& csv) {
  std::string header;
  if (!std::getline(csv, header)) throw ParseError("empty CSV");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != kCsvHeader)
    throw ParseError("unexpected CSV header: " + header);

  struct Cell {
    Rational sum;
    int count = 0;
  };
  // param -> solver -> x -> accumulated exact ratio.
  std::map<std::string, std::map<SolverKind, std::map<Index, Cell>>> table;
  std::string line;
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 9) throw ParseError("bad CSV row: " + line);
    const std::string& param = f[0];
    const Index x = parse_ll(f[1], "sweep_value");
    const SolverKind solver = solver_from_name(f[3]);
    const int support = static_cast<int>(parse_ll(f[4], "support"));
    const int optimum = static_cast<int>(parse_ll(f[5], "optimum"));
    Cell& cell = table[param][solver][x];
    cell.sum += support_ratio(support, optimum);
    cell.count += 1;
    ++rows;
  }
  if (rows == 0) throw ParseError("CSV has a header but no data rows");

  std::vector<PlotData> plots;
  for (auto& [param, by_solver] : table) {
    PlotData data;
    data.sweep_param = param;
    for (auto& [solver, by_x] : by_solver) {
      PlotSeries series;
      series.solver = solver;
      for (auto& [x, cell] : by_x)
        series.points.push_back(
            SeriesPoint{x, cell.sum / cell.count, cell.count});
      data.series.push_back(std::move(series));
    }
    plots.push_back(std::move(data));
  }
  return plots;
}

std::string render_svg(const PlotData& data) {
  constexpr double width = 640, height = 420;
  constexpr double left = 70, right = 600, top = 40, bottom = 370;

  Index min_x = 0, max_x = 0;
  bool first = true;
  for (const PlotSeries& s : data.series)
    for (const SeriesPoint& pt : s.points) {
      if (first || pt.x < min_x) min_x = pt.x;
      if (first || pt.x > max_x) max_x = pt.x;
      first = false;
    }
  if (first) throw ParseError("nothing to plot");
  const double span = max_x == min_x ? 1.0 : static_cast<double>(max_x - min_x);

  const auto x_pos = [&](Index x) {
    return left + (right - left) * (static_cast<double>(x - min_x) / span);
  };
  const auto y_pos = [&](double ratio) {
    return bottom - (bottom - top) * ratio;  // ratio axis spans [0, 1]
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << (width / 2)
     << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">mean support "
        "ratio vs "
     << data.sweep_param << "</text>\n";

  // Axes and horizontal grid.
  os << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
     << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
     << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double ratio = tick / 4.0;
    const double y = y_pos(ratio);
    os << "<line x1=\"" << left << "\" y1=\"" << format_coord(y) << "\" x2=\""
       << right << "\" y2=\"" << format_coord(y)
       << "\" stroke=\"#DDDDDD\"/>\n";
    os << "<text x=\"" << (left - 8) << "\" y=\"" << format_coord(y + 4)
       << "\" text-anchor=\"end\" font-size=\"12\">" << format_coord(ratio)
       << "</text>\n";
  }
  // X ticks and labels from the union of series points.
  {
    std::map<Index, bool> xs;
    for (const PlotSeries& s : data.series)
      for (const SeriesPoint& pt : s.points) xs[pt.x] = true;
    for (const auto& [x, unused] : xs) {
      (void)unused;
      os << "<line x1=\"" << format_coord(x_pos(x)) << "\" y1=\"" << bottom
         << "\" x2=\"" << format_coord(x_pos(x)) << "\" y2=\"" << (bottom + 5)
         << "\" stroke=\"black\"/>\n";
      os << "<text x=\"" << format_coord(x_pos(x)) << "\" y=\""
         << (bottom + 18) << "\" text-anchor=\"middle\" font-size=\"12\">" << x
         << "</text>\n";
    }
  }
  os << "<text x=\"" << ((left + right) / 2) << "\" y=\"" << (bottom + 36)
     << "\" text-anchor=\"middle\" font-size=\"13\">" << data.sweep_param
     << "</text>\n";

  double legend_y = top + 10;
  for (const PlotSeries& s : data.series) {
    const char* color = series_color(s.solver);
    std::ostringstream path;
    bool started = false;
    for (const SeriesPoint& pt : s.points) {
      path << (started ? " L " : "M ") << format_coord(x_pos(pt.x)) << ' '
           << format_coord(y_pos(to_double(pt.mean_ratio)));
      started = true;
    }
    os << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\"/>\n";
    for (const SeriesPoint& pt : s.points)
      os << "<circle cx=\"" << format_coord(x_pos(pt.x)) << "\" cy=\""
         << format_coord(y_pos(to_double(pt.mean_ratio))) << "\" r=\"3\" fill=\""
         << color << "\"/>\n";
    os << "<rect x=\"" << (right - 150) << "\" y=\"" << (legend_y - 9)
       << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
    os << "<text x=\"" << (right - 135) << "\" y=\"" << legend_y
       << "\" font-size=\"12\">" << solver_name(s.solver) << "</text>\n";
    legend_y += 18;
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<std::string> emit_plots(const std::string& csv_path,
                                    const std::string& out_prefix) {
  std::istringstream csv(read_text_file(csv_path));
  const std::vector<PlotData> plots = plot_data_from_csv(csv);
  std::vector<std::string> written;
  for (const PlotData& data : plots) {
    const std::string path = out_prefix + "_" + data.sweep_param + ".svg";
    write_text_file(path, render_svg(data));
    written.push_back(path);
  }
  return written;
}

}  // namespace isel
