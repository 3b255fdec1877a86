#include "gamedyn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gamedyn/errors.hpp"

namespace gamedyn {

namespace {

constexpr const char* kTraceHeader =
    "t,e,t_difficulty,u,r_signal,d_signal,action,action_reward,skill,epsilon,feedback_id";

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::vector<std::string> split_line(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = line.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(line.substr(pos));
      break;
    }
    parts.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

double parse_double_field(const std::string& s, const char* what) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) {
    throw InvalidInputError(std::string("bad ") + what + " field '" + s + "'");
  }
  return v;
}

int parse_int_field(const std::string& s, const char* what) {
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || s.empty()) {
    throw InvalidInputError(std::string("bad ") + what + " field '" + s + "'");
  }
  return static_cast<int>(v);
}

// ---- SVG ------------------------------------------------------------------

constexpr double kPanelWidth = 800.0;
constexpr double kPanelHeight = 400.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 170.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 50.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// One 800x400 panel: axes, ticks, one polyline per trace, legend.
void render_panel(std::ostringstream& svg, const std::vector<SimulationTrace>& traces,
                  double y_offset, const char* y_label, double y_min, double y_max,
                  int max_t) {
  const double plot_left = kMarginLeft;
  const double plot_right = kPanelWidth - kMarginRight;
  const double plot_top = y_offset + kMarginTop;
  const double plot_bottom = y_offset + kPanelHeight - kMarginBottom;
  const double plot_w = plot_right - plot_left;
  const double plot_h = plot_bottom - plot_top;
  const double t_span = std::max(1, max_t);
  const double y_span = y_max - y_min;

  auto x_of = [&](double t) { return plot_left + (t / t_span) * plot_w; };
  auto y_of = [&](double v) {
    double frac = (std::clamp(v, y_min, y_max) - y_min) / y_span;
    return plot_bottom - frac * plot_h;
  };

  svg << "<g>\n";
  // axes
  svg << "<line x1=\"" << coord(plot_left) << "\" y1=\"" << coord(plot_bottom)
      << "\" x2=\"" << coord(plot_right) << "\" y2=\"" << coord(plot_bottom)
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << coord(plot_left) << "\" y1=\"" << coord(plot_top)
      << "\" x2=\"" << coord(plot_left) << "\" y2=\"" << coord(plot_bottom)
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  // ticks and grid labels
  for (int i = 0; i <= 4; ++i) {
    double t = t_span * i / 4.0;
    double x = x_of(t);
    svg << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(plot_bottom) << "\" x2=\""
        << coord(x) << "\" y2=\"" << coord(plot_bottom + 5.0)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << coord(x) << "\" y=\"" << coord(plot_bottom + 20.0)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt(std::round(t))
        << "</text>\n";

    double v = y_min + y_span * i / 4.0;
    double y = y_of(v);
    svg << "<line x1=\"" << coord(plot_left - 5.0) << "\" y1=\"" << coord(y) << "\" x2=\""
        << coord(plot_left) << "\" y2=\"" << coord(y)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << coord(plot_left - 10.0) << "\" y=\"" << coord(y + 4.0)
        << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(v) << "</text>\n";
  }

  // axis titles
  svg << "<text x=\"" << coord(plot_left + plot_w / 2.0) << "\" y=\""
      << coord(plot_bottom + 38.0) << "\" font-size=\"13\" text-anchor=\"middle\">step"
      << "</text>\n";
  svg << "<text x=\"" << coord(plot_left - 50.0) << "\" y=\""
      << coord(plot_top + plot_h / 2.0) << "\" font-size=\"13\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 " << coord(plot_left - 50.0) << " "
      << coord(plot_top + plot_h / 2.0) << ")\">" << y_label << "</text>\n";

  // series
  const bool engagement_panel = std::string(y_label) == "engagement";
  for (std::size_t i = 0; i < traces.size(); ++i) {
    svg << "<polyline fill=\"none\" stroke=\"" << kPalette[i % kPaletteSize]
        << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& row : traces[i].rows) {
      double v = engagement_panel ? row.e : row.t_difficulty;
      if (!first) svg << " ";
      svg << coord(x_of(static_cast<double>(row.t))) << "," << coord(y_of(v));
      first = false;
    }
    svg << "\"/>\n";
  }

  // legend
  svg << "<g class=\"legend\">\n";
  for (std::size_t i = 0; i < traces.size(); ++i) {
    double ly = plot_top + 8.0 + 18.0 * static_cast<double>(i);
    svg << "<g class=\"legend-entry\"><rect x=\"" << coord(plot_right + 12.0) << "\" y=\""
        << coord(ly) << "\" width=\"12\" height=\"12\" fill=\""
        << kPalette[i % kPaletteSize] << "\"/><text x=\"" << coord(plot_right + 30.0)
        << "\" y=\"" << coord(ly + 10.0) << "\" font-size=\"12\">"
        << xml_escape(traces[i].scenario_name) << "</text></g>\n";
  }
  svg << "</g>\n";
  svg << "</g>\n";
}

}  // namespace

std::string write_trace_csv(const SimulationTrace& trace) {
  std::ostringstream out;
  out << kTraceHeader << "\n";
  for (const auto& row : trace.rows) {
    out << row.t << "," << fmt(row.e) << "," << fmt(row.t_difficulty) << "," << fmt(row.u)
        << "," << fmt(row.r_signal) << "," << fmt(row.d_signal) << "," << row.action << ","
        << fmt(row.action_reward) << "," << fmt(row.skill) << "," << fmt(row.epsilon) << ","
        << row.feedback_id << "\n";
  }
  return out.str();
}

SimulationTrace read_trace_csv(const std::string& text, std::string name) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw InvalidInputError("empty trace document");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (line != kTraceHeader) {
    throw InvalidInputError("unexpected trace header '" + line + "'");
  }
  SimulationTrace trace;
  trace.scenario_name = std::move(name);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    auto fields = split_line(line, ',');
    if (fields.size() != 11) {
      throw InvalidInputError("trace row with " + std::to_string(fields.size()) +
                              " fields: '" + line + "'");
    }
    TraceRow row;
    row.t = parse_int_field(fields[0], "t");
    row.e = parse_double_field(fields[1], "e");
    row.t_difficulty = parse_double_field(fields[2], "t_difficulty");
    row.u = parse_double_field(fields[3], "u");
    row.r_signal = parse_double_field(fields[4], "r_signal");
    row.d_signal = parse_double_field(fields[5], "d_signal");
    row.action = parse_int_field(fields[6], "action");
    row.action_reward = parse_double_field(fields[7], "action_reward");
    row.skill = parse_double_field(fields[8], "skill");
    row.epsilon = parse_double_field(fields[9], "epsilon");
    row.feedback_id = fields[10];
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

std::string write_sweep_csv(const std::vector<SweepResult>& results,
                            const std::vector<std::string>& axis_paths) {
  if (results.empty()) {
    throw PreconditionError("write_sweep_csv: results must be non-empty");
  }
  std::ostringstream out;
  for (const auto& path : axis_paths) {
    out << path << ",";
  }
  out << "seed,final_e,mean_e,min_e,max_e,steps_to_difficulty_stable,mean_t_difficulty,"
         "total_agent_reward\n";
  for (const auto& res : results) {
    if (res.axis_values.size() != axis_paths.size()) {
      throw PreconditionError("write_sweep_csv: axis arity mismatch");
    }
    for (double v : res.axis_values) {
      out << fmt(v) << ",";
    }
    out << res.seed << ",";
    if (res.summary.has_value()) {
      const RunSummary& s = *res.summary;
      out << fmt(s.final_e) << "," << fmt(s.mean_e) << "," << fmt(s.min_e) << ","
          << fmt(s.max_e) << ",";
      if (s.steps_to_difficulty_stable.has_value()) {
        out << *s.steps_to_difficulty_stable;
      }
      out << "," << fmt(s.mean_t_difficulty) << "," << fmt(s.total_agent_reward);
    } else {
      out << ",,,,,,";
    }
    out << "\n";
  }
  return out.str();
}

std::string render_chart(const std::vector<SimulationTrace>& traces, ChartKind kind,
                         const ChartOptions& options) {
  if (traces.empty()) {
    throw PreconditionError("render_chart: at least one trace required");
  }
  int max_t = 0;
  for (const auto& trace : traces) {
    if (trace.rows.empty()) {
      throw PreconditionError("render_chart: trace '" + trace.scenario_name + "' is empty");
    }
    max_t = std::max(max_t, trace.rows.back().t);
  }
  if (kind != ChartKind::Engagement && !(options.difficulty_max > options.difficulty_min)) {
    throw PreconditionError("render_chart: difficulty axis range is empty");
  }

  int n_panels = kind == ChartKind::Both ? 2 : 1;
  double height = kPanelHeight * n_panels;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 800 " << fmt(height) << "\">\n";

  if (kind == ChartKind::Engagement || kind == ChartKind::Both) {
    render_panel(svg, traces, 0.0, "engagement", 0.0, 1.0, max_t);
  }
  if (kind == ChartKind::Difficulty || kind == ChartKind::Both) {
    double offset = kind == ChartKind::Both ? kPanelHeight : 0.0;
    render_panel(svg, traces, offset, "difficulty", options.difficulty_min,
                 options.difficulty_max, max_t);
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing '" + tmp + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("failed renaming '" + tmp + "' to '" + path + "'");
  }
}

}  // namespace gamedyn
