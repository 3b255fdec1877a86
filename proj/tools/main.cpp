#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gamedyn/content_port.hpp"
#include "gamedyn/errors.hpp"
#include "gamedyn/report.hpp"
#include "gamedyn/scenario.hpp"
#include "gamedyn/sim_engine.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

// Config/validation/usage problems exit 2; everything else unexpected is a
// runtime error and exits 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

gamedyn::ScenarioConfig load_scenario_file(const std::string& path) {
  auto result = gamedyn::load_scenario(read_file(path));
  if (!result.config.has_value()) {
    throw ConfigError("invalid scenario '" + path + "':\n" + result.report.to_string());
  }
  return *result.config;
}

std::unique_ptr<gamedyn::ContentProvider> make_provider(bool remote) {
  if (!remote) {
    return std::make_unique<gamedyn::StubContentProvider>();
  }
  auto cfg = gamedyn::remote_config_from_env();
  if (!cfg.has_value()) {
    throw ConfigError("remote LLM requested but GAMEDYN_LLM_URL is not set");
  }
  return std::make_unique<gamedyn::RemoteContentProvider>(*cfg);
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    std::string item = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (item.empty()) {
      throw ConfigError("empty entry in seed list '" + text + "'");
    }
    try {
      std::size_t used = 0;
      seeds.push_back(std::stoull(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw ConfigError("bad seed '" + item + "' in list");
    }
    if (next == std::string::npos) {
      break;
    }
    pos = next + 1;
  }
  return seeds;
}

gamedyn::ChartKind parse_kind(const std::string& kind) {
  if (kind == "engagement") return gamedyn::ChartKind::Engagement;
  if (kind == "difficulty") return gamedyn::ChartKind::Difficulty;
  if (kind == "both") return gamedyn::ChartKind::Both;
  throw ConfigError("unknown chart kind '" + kind + "' (engagement|difficulty|both)");
}

std::string axis_label(const std::vector<std::string>& paths,
                       const std::vector<double>& values, std::uint64_t seed,
                       bool show_seed) {
  std::ostringstream out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i > 0) out << " ";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", values[i]);
    out << paths[i] << "=" << buf;
  }
  if (show_seed) {
    out << " seed=" << seed;
  }
  return out.str();
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_path,
                 std::optional<std::uint64_t> seed, std::optional<int> steps,
                 const std::string& chart_path, bool remote_llm) {
  gamedyn::ScenarioConfig scenario = load_scenario_file(scenario_path);
  if (seed.has_value()) {
    scenario.seed = *seed;
  }
  if (steps.has_value()) {
    if (*steps < 1) {
      throw ConfigError("--steps must be >= 1");
    }
    scenario.horizon = *steps;
  }
  auto provider = make_provider(remote_llm || scenario.use_remote_llm);

  gamedyn::SimulationTrace trace = gamedyn::run_simulation(scenario, *provider);
  gamedyn::write_file_atomic(out_path, gamedyn::write_trace_csv(trace));

  if (!chart_path.empty()) {
    gamedyn::ChartOptions options;
    options.difficulty_min = scenario.adaptation.t_min;
    options.difficulty_max = scenario.adaptation.t_max;
    gamedyn::write_file_atomic(chart_path,
                               gamedyn::render_chart({trace}, gamedyn::ChartKind::Both,
                                                     options));
  }
  return kExitOk;
}

int cmd_sweep(const std::string& scenario_path, const std::vector<std::string>& axis_specs,
              const std::string& seeds_text, const std::string& out_path,
              const std::string& chart_path, unsigned jobs, bool remote_llm) {
  gamedyn::SweepSpec spec;
  spec.base = load_scenario_file(scenario_path);
  for (const auto& axis : axis_specs) {
    try {
      spec.axes.push_back(gamedyn::parse_sweep_axis(axis));
    } catch (const gamedyn::InvalidInputError& e) {
      throw ConfigError(e.what());
    }
  }
  if (!seeds_text.empty()) {
    spec.replicate_seeds = parse_seed_list(seeds_text);
  }

  auto provider = make_provider(remote_llm || spec.base.use_remote_llm);
  auto results = gamedyn::run_sweep(spec, *provider, jobs);

  std::vector<std::string> paths;
  for (const auto& axis : spec.axes) {
    paths.push_back(axis.path);
  }
  gamedyn::write_file_atomic(out_path, gamedyn::write_sweep_csv(results, paths));

  for (const auto& res : results) {
    if (!res.error.empty()) {
      std::fprintf(stderr, "warning: run (%s) failed: %s\n",
                   axis_label(paths, res.axis_values, res.seed, true).c_str(),
                   res.error.c_str());
    }
  }

  if (!chart_path.empty()) {
    // Overlay the engagement series of every run.
    std::vector<gamedyn::SimulationTrace> traces;
    bool multi_seed = spec.replicate_seeds.size() > 1;
    for (const auto& cell : gamedyn::expand_sweep(spec)) {
      gamedyn::SimulationTrace trace = gamedyn::run_simulation(cell.scenario, *provider);
      trace.scenario_name = axis_label(paths, cell.axis_values, cell.seed, multi_seed);
      traces.push_back(std::move(trace));
    }
    gamedyn::write_file_atomic(
        chart_path, gamedyn::render_chart(traces, gamedyn::ChartKind::Engagement));
  }
  return kExitOk;
}

int cmd_preset(bool list, const std::string& name, const std::string& emit_path) {
  if (list) {
    for (const auto& preset_name : gamedyn::preset_names()) {
      std::printf("%s\n", preset_name.c_str());
    }
    return kExitOk;
  }
  if (name.empty() || emit_path.empty()) {
    throw ConfigError("preset requires --list or both --name and --emit");
  }
  gamedyn::ScenarioConfig scenario;
  try {
    scenario = gamedyn::preset(name);
  } catch (const gamedyn::InvalidInputError& e) {
    throw ConfigError(e.what());
  }
  gamedyn::write_file_atomic(emit_path, gamedyn::serialize(scenario));
  return kExitOk;
}

int cmd_validate(const std::string& scenario_path) {
  auto result = gamedyn::load_scenario(read_file(scenario_path));
  if (result.config.has_value()) {
    std::printf("OK: scenario '%s' is valid\n", result.config->name.c_str());
    return kExitOk;
  }
  std::fprintf(stderr, "%s", result.report.to_string().c_str());
  return kExitConfig;
}

int cmd_chart(const std::vector<std::string>& trace_paths, const std::string& kind,
              const std::string& out_path) {
  std::vector<gamedyn::SimulationTrace> traces;
  for (const auto& path : trace_paths) {
    std::string stem = std::filesystem::path(path).stem().string();
    try {
      traces.push_back(gamedyn::read_trace_csv(read_file(path), stem));
    } catch (const gamedyn::InvalidInputError& e) {
      throw ConfigError("cannot parse trace '" + path + "': " + e.what());
    }
  }
  gamedyn::write_file_atomic(out_path, gamedyn::render_chart(traces, parse_kind(kind)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gamedyn: gamification dynamics simulator"};
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run one scenario and write its trace");
  std::string sim_scenario;
  std::string sim_out;
  std::string sim_chart;
  std::uint64_t sim_seed = 0;
  int sim_steps = 0;
  bool sim_remote = false;
  simulate->add_option("--scenario", sim_scenario, "Scenario JSON file")->required();
  simulate->add_option("--out", sim_out, "Trace CSV output path")->required();
  auto* sim_seed_opt = simulate->add_option("--seed", sim_seed, "Override the scenario seed");
  auto* sim_steps_opt = simulate->add_option("--steps", sim_steps, "Override the horizon");
  simulate->add_option("--chart", sim_chart, "Also render an SVG chart here");
  simulate->add_flag("--remote-llm", sim_remote, "Use the remote feedback endpoint");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a parameter grid and write summaries");
  std::string sweep_scenario;
  std::vector<std::string> sweep_axes;
  std::string sweep_seeds;
  std::string sweep_out;
  std::string sweep_chart;
  unsigned sweep_jobs = std::max(1u, std::thread::hardware_concurrency());
  bool sweep_remote = false;
  sweep->add_option("--scenario", sweep_scenario, "Base scenario JSON file")->required();
  sweep->add_option("--axis", sweep_axes,
                    "Axis spec path=start:stop:step or path=v1,v2,... (repeatable)")
      ->required();
  sweep->add_option("--seeds", sweep_seeds, "Comma-separated replicate seeds");
  sweep->add_option("--out", sweep_out, "Sweep CSV output path")->required();
  sweep->add_option("--chart", sweep_chart, "Overlay engagement chart output path");
  sweep->add_option("--jobs", sweep_jobs, "Worker threads (default: hardware)");
  sweep->add_flag("--remote-llm", sweep_remote, "Use the remote feedback endpoint");

  // preset
  auto* preset = app.add_subcommand("preset", "List or emit built-in scenario presets");
  bool preset_list = false;
  std::string preset_name;
  std::string preset_emit;
  preset->add_flag("--list", preset_list, "List preset names");
  preset->add_option("--name", preset_name, "Preset to emit");
  preset->add_option("--emit", preset_emit, "Output path for the preset JSON");

  // validate
  auto* validate = app.add_subcommand("validate", "Validate a scenario file");
  std::string validate_scenario;
  validate->add_option("--scenario", validate_scenario, "Scenario JSON file")->required();

  // chart
  auto* chart = app.add_subcommand("chart", "Re-render charts from saved trace CSVs");
  std::vector<std::string> chart_traces;
  std::string chart_kind = "both";
  std::string chart_out;
  chart->add_option("--trace", chart_traces, "Trace CSV file (repeatable)")->required();
  chart->add_option("--kind", chart_kind, "engagement, difficulty, or both");
  chart->add_option("--out", chart_out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return kExitConfig;
  }

  try {
    if (simulate->parsed()) {
      return cmd_simulate(sim_scenario, sim_out,
                          sim_seed_opt->count() ? std::optional<std::uint64_t>(sim_seed)
                                                : std::nullopt,
                          sim_steps_opt->count() ? std::optional<int>(sim_steps)
                                                 : std::nullopt,
                          sim_chart, sim_remote);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_scenario, sweep_axes, sweep_seeds, sweep_out, sweep_chart,
                       sweep_jobs, sweep_remote);
    }
    if (preset->parsed()) {
      return cmd_preset(preset_list, preset_name, preset_emit);
    }
    if (validate->parsed()) {
      return cmd_validate(validate_scenario);
    }
    if (chart->parsed()) {
      return cmd_chart(chart_traces, chart_kind, chart_out);
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitConfig;
}
