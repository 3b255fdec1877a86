#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamedyn/content_port.hpp"
#include "gamedyn/random.hpp"
#include "gamedyn/rl.hpp"
#include "gamedyn/scenario.hpp"

namespace gamedyn {

// One step of a run. Row 0 holds the initial state and carries no action
// (action = -1, signals zeroed).
struct TraceRow {
  int t = 0;
  double e = 0.0;             // engagement after the step
  double t_difficulty = 0.0;  // difficulty after the step
  double u = 0.0;             // performance observed during the step
  double r_signal = 0.0;      // reward signal fed to the engagement update
  double d_signal = 0.0;      // disengagement signal
  int action = -1;
  double action_reward = 0.0;
  double skill = 0.0;         // skill after the step
  double epsilon = 0.0;       // exploration rate used for the selection
  std::string feedback_id;    // content message id, empty when none
};

struct SimulationTrace {
  std::string scenario_name;
  std::uint64_t seed = 0;
  std::vector<TraceRow> rows;         // horizon + 1 rows, t = 0..horizon
  std::vector<std::string> warnings;  // provider failures, in step order
};

struct RunSummary {
  double final_e = 0.0;
  double mean_e = 0.0;
  double min_e = 0.0;
  double max_e = 0.0;
  // First step after which |dT| stays below 1e-3; absent when the trace is
  // still moving at its final step.
  std::optional<int> steps_to_difficulty_stable;
  double mean_t_difficulty = 0.0;
  double total_agent_reward = 0.0;
};

// Mutable per-run state threaded through run_step.
struct SimState {
  EngagementState engagement;
  double difficulty = 0.0;
  UserProfile profile;
};

SimState initial_state(const ScenarioConfig& scenario);

// Execute one step: select an action, apply its effect, observe the user,
// adapt difficulty, update engagement, skill and the Q table, and emit the
// row. `history` is the trace so far (used for the feedback trend); provider
// failures append to `warnings` and never abort the step.
TraceRow run_step(SimState& state, const ScenarioConfig& scenario, QTable& q,
                  RandomStream& rng, const ContentProvider& provider,
                  const std::vector<TraceRow>& history,
                  std::vector<std::string>& warnings);

// Run a full scenario. The random stream is seeded from scenario.seed only,
// so identical inputs give identical traces.
SimulationTrace run_simulation(const ScenarioConfig& scenario,
                               const ContentProvider& provider);

// Statistics over a non-empty trace.
RunSummary summarize(const SimulationTrace& trace);

struct SweepCell {
  std::vector<double> axis_values;
  std::vector<std::size_t> axis_indices;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  ScenarioConfig scenario;
};

// Cartesian product of axes x replicate seeds, in lexicographic
// (axis indices, replicate index) order. Each cell's scenario is the base
// with the axis values applied and the replicate seed installed.
std::vector<SweepCell> expand_sweep(const SweepSpec& spec);

struct SweepResult {
  std::vector<double> axis_values;
  std::uint64_t seed = 0;
  std::optional<RunSummary> summary;  // absent when the run failed
  std::string error;
};

// Run every cell, optionally across `jobs` worker threads. Output order is
// the expand_sweep order regardless of scheduling; a failed run records its
// error in place and the rest proceed.
std::vector<SweepResult> run_sweep(const SweepSpec& spec, const ContentProvider& provider,
                                   unsigned jobs = 1);

}  // namespace gamedyn
