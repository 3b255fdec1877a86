#include "gamedyn/sim_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "gamedyn/dynamics.hpp"
#include "gamedyn/errors.hpp"
#include "gamedyn/user_model.hpp"

namespace gamedyn {

namespace {

constexpr double kStableDeltaThreshold = 1e-3;
constexpr double kTrendThreshold = 1e-3;
constexpr int kTrendWindow = 5;

Trend trend_of(const std::vector<TraceRow>& history, double e_now, int t_now) {
  if (history.empty()) {
    return Trend::Flat;
  }
  int back = std::max(0, t_now - kTrendWindow);
  double e_then = history[static_cast<std::size_t>(back)].e;
  double delta = e_now - e_then;
  if (delta > kTrendThreshold) return Trend::Rising;
  if (delta < -kTrendThreshold) return Trend::Falling;
  return Trend::Flat;
}

int pick_action(const ScenarioConfig& sc, const QTable& q, int s, int step_index,
                RandomStream& rng, double& epsilon_used) {
  epsilon_used = 0.0;
  switch (sc.policy_mode) {
    case PolicyMode::EpsilonGreedy:
      epsilon_used = epsilon_at(sc.rl, step_index);
      return select_action(q, s, epsilon_used, rng);
    case PolicyMode::Greedy:
      return q.best_action(s);
    case PolicyMode::NoOp: {
      int idx = noop_index(sc.actions);
      if (idx < 0) {
        throw PreconditionError("noop policy requires an action named NoOp");
      }
      return idx;
    }
    case PolicyMode::Scripted:
      if (step_index < 0 || step_index >= static_cast<int>(sc.script.size())) {
        throw PreconditionError("script too short for horizon");
      }
      return sc.script[static_cast<std::size_t>(step_index)];
  }
  throw PreconditionError("unknown policy mode");
}

}  // namespace

SimState initial_state(const ScenarioConfig& scenario) {
  SimState state;
  state.engagement.e = scenario.profile.initial_engagement;
  state.engagement.t = 0;
  state.difficulty = scenario.initial_difficulty;
  state.profile = scenario.profile;
  return state;
}

TraceRow run_step(SimState& state, const ScenarioConfig& sc, QTable& q, RandomStream& rng,
                  const ContentProvider& provider, const std::vector<TraceRow>& history,
                  std::vector<std::string>& warnings) {
  const auto& bounds = sc.adaptation;
  const int step_index = state.engagement.t;

  // (1)-(2) observe the discrete state and pick an action.
  int s = discretize_state(state.engagement.e, state.difficulty, bounds.t_min, bounds.t_max,
                           sc.rl.e_bins, sc.rl.t_bins);
  double epsilon_used = 0.0;
  int a = pick_action(sc, q, s, step_index, rng, epsilon_used);
  if (a < 0 || a >= static_cast<int>(sc.actions.size())) {
    throw PreconditionError("action index out of catalog range");
  }
  const ActionSpec& action = sc.actions[static_cast<std::size_t>(a)];

  // (3) apply the action's difficulty effect; this is the task the user faces.
  double faced = std::clamp(state.difficulty + action.difficulty_delta, bounds.t_min,
                            bounds.t_max);

  // (4)-(5) observe performance, adapt difficulty for the next step.
  double u = performance(state.profile, faced, rng);
  double t_next = adapt_difficulty(faced, u, sc.adaptation);

  // (6)-(8) compose the reward signal, evaluate disengagement, update engagement.
  double r_signal = std::clamp(u + action.reward_bonus, 0.0, 1.0);
  double d_signal = disengagement(state.profile, faced);
  EngagementState e_next = engagement_step(state.engagement, r_signal, d_signal,
                                           sc.engagement);

  // (9) skill growth from the attempt.
  UserProfile profile_next = update_skill(state.profile, u, faced);

  // (10)-(11) agent reward and Q backup toward the state it produced.
  double r_agent = action_reward(action.gain, action.cost, sc.reward_weights) +
                   sc.rl.shaping_rho * (e_next.e - state.engagement.e);
  int s_next = discretize_state(e_next.e, t_next, bounds.t_min, bounds.t_max, sc.rl.e_bins,
                                sc.rl.t_bins);
  q_update(q, s, a, r_agent, s_next, sc.rl);

  // (12) emit the row; feedback goes out last so the context matches it.
  TraceRow row;
  row.t = e_next.t;
  row.e = e_next.e;
  row.t_difficulty = t_next;
  row.u = u;
  row.r_signal = r_signal;
  row.d_signal = d_signal;
  row.action = a;
  row.action_reward = r_agent;
  row.skill = profile_next.skill;
  row.epsilon = epsilon_used;

  if (action.send_feedback) {
    FeedbackContext ctx;
    ctx.step = row.t;
    ctx.engagement = row.e;
    ctx.difficulty = row.t_difficulty;
    ctx.performance = row.u;
    ctx.trend = trend_of(history, row.e, row.t);
    ctx.preset_name = sc.name;
    try {
      row.feedback_id = provider.generate_feedback(ctx).id;
    } catch (const std::exception& e) {
      warnings.push_back("step " + std::to_string(row.t) +
                         ": feedback provider failed: " + e.what());
    }
  }

  state.engagement = e_next;
  state.difficulty = t_next;
  state.profile = profile_next;
  return row;
}

SimulationTrace run_simulation(const ScenarioConfig& scenario,
                               const ContentProvider& provider) {
  if (scenario.horizon < 0) {
    throw PreconditionError("horizon must be >= 0");
  }
  SimulationTrace trace;
  trace.scenario_name = scenario.name;
  trace.seed = scenario.seed;

  RandomStream rng(scenario.seed);
  QTable q(scenario.rl.e_bins * scenario.rl.t_bins,
           static_cast<int>(scenario.actions.size()));
  SimState state = initial_state(scenario);

  TraceRow initial;
  initial.t = 0;
  initial.e = state.engagement.e;
  initial.t_difficulty = state.difficulty;
  initial.skill = state.profile.skill;
  trace.rows.push_back(initial);

  for (int step = 0; step < scenario.horizon; ++step) {
    trace.rows.push_back(
        run_step(state, scenario, q, rng, provider, trace.rows, trace.warnings));
  }
  return trace;
}

RunSummary summarize(const SimulationTrace& trace) {
  if (trace.rows.empty()) {
    throw PreconditionError("summarize: trace must be non-empty");
  }
  RunSummary out;
  out.final_e = trace.rows.back().e;
  out.min_e = trace.rows.front().e;
  out.max_e = trace.rows.front().e;
  double e_sum = 0.0;
  double t_sum = 0.0;
  for (const auto& row : trace.rows) {
    e_sum += row.e;
    t_sum += row.t_difficulty;
    out.min_e = std::min(out.min_e, row.e);
    out.max_e = std::max(out.max_e, row.e);
    out.total_agent_reward += row.action_reward;
  }
  out.mean_e = e_sum / static_cast<double>(trace.rows.size());
  out.mean_t_difficulty = t_sum / static_cast<double>(trace.rows.size());

  // Last step whose difficulty move was >= the threshold; everything after it
  // is stable. A move at the very last step means stability was never reached.
  int last_violation = 0;
  for (std::size_t i = 1; i < trace.rows.size(); ++i) {
    double delta = trace.rows[i].t_difficulty - trace.rows[i - 1].t_difficulty;
    if (std::fabs(delta) >= kStableDeltaThreshold) {
      last_violation = static_cast<int>(i);
    }
  }
  if (last_violation == static_cast<int>(trace.rows.size()) - 1 && trace.rows.size() > 1 &&
      last_violation != 0) {
    out.steps_to_difficulty_stable = std::nullopt;
  } else {
    out.steps_to_difficulty_stable = last_violation;
  }
  return out;
}

std::vector<SweepCell> expand_sweep(const SweepSpec& spec) {
  for (const auto& axis : spec.axes) {
    if (axis.values.empty()) {
      throw PreconditionError("sweep axis '" + axis.path + "' has no values");
    }
  }
  std::vector<std::uint64_t> seeds = spec.replicate_seeds;
  if (seeds.empty()) {
    seeds.push_back(spec.base.seed);
  }

  std::size_t n_cells = 1;
  for (const auto& axis : spec.axes) {
    n_cells *= axis.values.size();
  }

  std::vector<SweepCell> cells;
  cells.reserve(n_cells * seeds.size());
  for (std::size_t cell = 0; cell < n_cells; ++cell) {
    // Decode the flat cell number into per-axis indices, last axis fastest.
    std::vector<std::size_t> indices(spec.axes.size(), 0);
    std::size_t rem = cell;
    for (std::size_t ax = spec.axes.size(); ax-- > 0;) {
      indices[ax] = rem % spec.axes[ax].values.size();
      rem /= spec.axes[ax].values.size();
    }
    for (std::size_t rep = 0; rep < seeds.size(); ++rep) {
      SweepCell out;
      out.axis_indices = indices;
      out.replicate = rep;
      out.seed = seeds[rep];
      out.scenario = spec.base;
      out.scenario.seed = seeds[rep];
      for (std::size_t ax = 0; ax < spec.axes.size(); ++ax) {
        double value = spec.axes[ax].values[indices[ax]];
        out.axis_values.push_back(value);
        set_param(out.scenario, spec.axes[ax].path, value);
      }
      cells.push_back(std::move(out));
    }
  }
  return cells;
}

std::vector<SweepResult> run_sweep(const SweepSpec& spec, const ContentProvider& provider,
                                   unsigned jobs) {
  std::vector<SweepCell> cells = expand_sweep(spec);
  std::vector<SweepResult> results(cells.size());

  auto run_one = [&](std::size_t i) {
    results[i].axis_values = cells[i].axis_values;
    results[i].seed = cells[i].seed;
    try {
      SimulationTrace trace = run_simulation(cells[i].scenario, provider);
      results[i].summary = summarize(trace);
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  };

  if (jobs <= 1 || cells.size() <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      run_one(i);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  unsigned n_workers = std::min<std::size_t>(jobs, cells.size());
  std::vector<std::thread> workers;
  workers.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= results.size()) {
          return;
        }
        run_one(i);
      }
    });
  }
  for (auto& worker : workers) {
    worker.join();
  }
  return results;
}

}  // namespace gamedyn
