#pragma once

#include <string>
#include <vector>

#include "gamedyn/sim_engine.hpp"

namespace gamedyn {

// Fixed-header trace CSV; floats carry 6 significant digits, lines end in LF.
std::string write_trace_csv(const SimulationTrace& trace);

// Parse a document produced by write_trace_csv. `name` labels the trace
// (charts re-rendered from CSV use it for the legend).
SimulationTrace read_trace_csv(const std::string& text, std::string name);

// One row per run: axis columns in declaration order, seed, then the summary
// fields. A failed run leaves its summary columns empty.
std::string write_sweep_csv(const std::vector<SweepResult>& results,
                            const std::vector<std::string>& axis_paths);

enum class ChartKind { Engagement, Difficulty, Both };

struct ChartOptions {
  double difficulty_min = 0.0;
  double difficulty_max = 10.0;
};

// SVG 1.1 line chart, one 800x400 panel per requested kind ("both" stacks
// engagement over difficulty), one polyline per trace per panel, legend from
// trace names.
std::string render_chart(const std::vector<SimulationTrace>& traces, ChartKind kind,
                         const ChartOptions& options = {});

// Write via temp file + rename so failures never leave partial output.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace gamedyn
