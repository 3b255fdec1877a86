#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gamedyn/content_port.hpp"
#include "gamedyn/report.hpp"
#include "gamedyn/scenario.hpp"
#include "gamedyn/sim_engine.hpp"
#include "support/oracles.hpp"

using namespace gamedyn;

namespace {

ScenarioConfig noop_scenario() {
  ScenarioConfig c;
  c.policy_mode = PolicyMode::NoOp;
  return c;
}

ScenarioConfig scripted_scenario(int action, int horizon) {
  ScenarioConfig c;
  c.horizon = horizon;
  c.policy_mode = PolicyMode::Scripted;
  c.script.assign(static_cast<std::size_t>(horizon), action);
  return c;
}

struct ThrowingProvider final : ContentProvider {
  FeedbackMessage generate_feedback(const FeedbackContext&) const override {
    throw std::runtime_error("provider unavailable");
  }
};

// Same routing as the stub but with caller-chosen text and id, to show text
// never leaks into the dynamics.
struct TextProvider final : ContentProvider {
  explicit TextProvider(std::string text) : text_(std::move(text)) {}
  FeedbackMessage generate_feedback(const FeedbackContext&) const override {
    return {text_, text_, FeedbackSource::Stub, ""};
  }
  std::string text_;
};

bool numeric_rows_equal(const TraceRow& a, const TraceRow& b) {
  return a.t == b.t && a.e == b.e && a.t_difficulty == b.t_difficulty && a.u == b.u &&
         a.r_signal == b.r_signal && a.d_signal == b.d_signal && a.action == b.action &&
         a.action_reward == b.action_reward && a.skill == b.skill && a.epsilon == b.epsilon;
}

}  // namespace

TEST_CASE("run_simulation: horizon 100 yields 101 rows, engagement in bounds") {
  StubContentProvider stub;
  auto trace = run_simulation(ScenarioConfig{}, stub);
  REQUIRE(trace.rows.size() == 101);
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    const auto& row = trace.rows[i];
    CHECK(row.t == static_cast<int>(i));
    CHECK(row.e >= 0.0);
    CHECK(row.e <= 1.0);
    CHECK(row.t_difficulty >= 0.0);
    CHECK(row.t_difficulty <= 10.0);
    CHECK(std::isfinite(row.u));
    CHECK(std::isfinite(row.action_reward));
  }
}

TEST_CASE("run_simulation: horizon 0 is just the initial row") {
  StubContentProvider stub;
  ScenarioConfig c;
  c.horizon = 0;
  auto trace = run_simulation(c, stub);
  REQUIRE(trace.rows.size() == 1);
  CHECK(trace.rows[0].t == 0);
  CHECK(trace.rows[0].action == -1);
  CHECK(trace.rows[0].e == c.profile.initial_engagement);
  CHECK(trace.rows[0].t_difficulty == c.initial_difficulty);
}

TEST_CASE("run_simulation: same seed reproduces the trace byte for byte") {
  StubContentProvider stub;
  ScenarioConfig c;
  c.profile.stochastic = true;
  auto a = run_simulation(c, stub);
  auto b = run_simulation(c, stub);
  CHECK(write_trace_csv(a) == write_trace_csv(b));

  c.seed = 43;
  auto other = run_simulation(c, stub);
  CHECK(write_trace_csv(a) != write_trace_csv(other));
}

TEST_CASE("run_step: with no disengagement engagement never drops") {
  StubContentProvider stub;
  ScenarioConfig c = noop_scenario();
  c.profile.base_disengagement = 0.0;
  c.profile.frustration_coeff = 0.0;
  c.profile.boredom_coeff = 0.0;
  auto trace = run_simulation(c, stub);
  for (std::size_t i = 1; i < trace.rows.size(); ++i) {
    CHECK(trace.rows[i].e >= trace.rows[i - 1].e);
  }
}

TEST_CASE("run_step: EaseTask with frozen adaptation moves difficulty by its delta") {
  StubContentProvider stub;
  ScenarioConfig c = scripted_scenario(1, 1);  // EaseTask, delta -0.5
  c.adaptation.gamma = 0.0;
  auto trace = run_simulation(c, stub);
  REQUIRE(trace.rows.size() == 2);
  CHECK(trace.rows[1].t_difficulty ==
        doctest::Approx(c.initial_difficulty - 0.5).epsilon(1e-12));

  // and it clamps at the lower bound
  c.initial_difficulty = 0.2;
  c.profile.skill = 0.2;
  auto clamped = run_simulation(c, stub);
  CHECK(clamped.rows[1].t_difficulty == 0.0);
}

TEST_CASE("run_step: repeated invocation from the same state is bit-identical") {
  StubContentProvider stub;
  ScenarioConfig c;
  c.profile.stochastic = true;
  QTable q1(100, 5);
  QTable q2(100, 5);
  RandomStream r1(7);
  RandomStream r2(7);
  SimState s1 = initial_state(c);
  SimState s2 = initial_state(c);
  std::vector<TraceRow> history{TraceRow{}};
  std::vector<std::string> warnings;
  TraceRow a = run_step(s1, c, q1, r1, stub, history, warnings);
  TraceRow b = run_step(s2, c, q2, r2, stub, history, warnings);
  CHECK(numeric_rows_equal(a, b));
  CHECK(a.feedback_id == b.feedback_id);
}

TEST_CASE("run_step: provider failure degrades to a warning") {
  ThrowingProvider bad;
  ScenarioConfig c = scripted_scenario(4, 3);  // SendEncouragement every step
  auto trace = run_simulation(c, bad);
  REQUIRE(trace.rows.size() == 4);
  CHECK(trace.warnings.size() == 3);
  for (std::size_t i = 1; i < trace.rows.size(); ++i) {
    CHECK(trace.rows[i].feedback_id.empty());
  }
}

TEST_CASE("run_step: message text never alters the numeric columns") {
  TextProvider upbeat("aaaa");
  TextProvider terse("bb");
  ScenarioConfig c = scripted_scenario(4, 20);
  auto a = run_simulation(c, upbeat);
  auto b = run_simulation(c, terse);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(numeric_rows_equal(a.rows[i], b.rows[i]));
  }
  CHECK(a.rows[1].feedback_id != b.rows[1].feedback_id);
}

TEST_CASE("trace-level alpha ordering under a fixed action schedule") {
  StubContentProvider stub;
  ScenarioConfig lo = scripted_scenario(0, 100);
  ScenarioConfig hi = lo;
  lo.engagement.alpha = 0.1;
  hi.engagement.alpha = 0.4;
  auto trace_lo = run_simulation(lo, stub);
  auto trace_hi = run_simulation(hi, stub);
  bool strict_seen = false;
  for (std::size_t i = 0; i < trace_lo.rows.size(); ++i) {
    CHECK(trace_hi.rows[i].e >= trace_lo.rows[i].e);
    strict_seen = strict_seen || trace_hi.rows[i].e > trace_lo.rows[i].e;
  }
  CHECK(strict_seen);
}

TEST_CASE("trace-level beta ordering under a fixed action schedule") {
  StubContentProvider stub;
  ScenarioConfig lo = scripted_scenario(0, 100);
  ScenarioConfig hi = lo;
  lo.engagement.beta = 0.05;
  hi.engagement.beta = 0.2;
  auto trace_lo = run_simulation(lo, stub);
  auto trace_hi = run_simulation(hi, stub);
  for (std::size_t i = 0; i < trace_lo.rows.size(); ++i) {
    CHECK(trace_hi.rows[i].e <= trace_lo.rows[i].e);
  }
}

TEST_CASE("difficulty stabilizes at the oracle fixed point with frozen skill") {
  StubContentProvider stub;
  ScenarioConfig c = noop_scenario();
  c.profile.learn_rate = 0.0;
  auto trace = run_simulation(c, stub);
  double t_star = oracles::adaptation_fixed_point(5.0, 1.0, 0.7, 0.0, 10.0);
  CHECK(std::fabs(trace.rows.back().t_difficulty - t_star) < 1e-2);
  auto summary = summarize(trace);
  REQUIRE(summary.steps_to_difficulty_stable.has_value());
  CHECK(*summary.steps_to_difficulty_stable < 100);
}

TEST_CASE("summarize: statistics over simple traces") {
  SimulationTrace constant;
  for (int t = 0; t < 4; ++t) {
    TraceRow row;
    row.t = t;
    row.e = 0.4;
    row.t_difficulty = 5.0;
    constant.rows.push_back(row);
  }
  auto s = summarize(constant);
  CHECK(s.mean_e == 0.4);
  CHECK(s.final_e == 0.4);
  CHECK(s.min_e == 0.4);
  CHECK(s.max_e == 0.4);
  REQUIRE(s.steps_to_difficulty_stable.has_value());
  CHECK(*s.steps_to_difficulty_stable == 0);

  SimulationTrace ramp;
  double es[3] = {0.2, 0.4, 0.6};
  for (int t = 0; t < 3; ++t) {
    TraceRow row;
    row.t = t;
    row.e = es[t];
    row.t_difficulty = 1.0;
    row.action_reward = 1.0;
    ramp.rows.push_back(row);
  }
  auto r = summarize(ramp);
  CHECK(r.mean_e == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(r.min_e == 0.2);
  CHECK(r.max_e == 0.6);
  CHECK(r.total_agent_reward == 3.0);
  CHECK(r.mean_t_difficulty == 1.0);

  SimulationTrace still_moving = ramp;
  still_moving.rows[2].t_difficulty = 2.0;
  CHECK_FALSE(summarize(still_moving).steps_to_difficulty_stable.has_value());

  SimulationTrace empty;
  CHECK_THROWS_AS(summarize(empty), PreconditionError);
}

TEST_CASE("run_sweep: grid size and lexicographic order") {
  StubContentProvider stub;
  SweepSpec spec;
  spec.base = scripted_scenario(0, 10);
  spec.axes.push_back({"engagement.alpha", {0.1, 0.2, 0.4}});
  spec.axes.push_back({"adaptation.gamma", {0.25, 0.5}});
  spec.replicate_seeds = {7, 8};
  auto results = run_sweep(spec, stub);
  REQUIRE(results.size() == 12);
  // row-major over (alpha, gamma), replicate fastest
  CHECK(results[0].axis_values == std::vector<double>{0.1, 0.25});
  CHECK(results[0].seed == 7);
  CHECK(results[1].axis_values == std::vector<double>{0.1, 0.25});
  CHECK(results[1].seed == 8);
  CHECK(results[2].axis_values == std::vector<double>{0.1, 0.5});
  CHECK(results[11].axis_values == std::vector<double>{0.4, 0.5});
  CHECK(results[11].seed == 8);
  for (const auto& res : results) {
    CHECK(res.summary.has_value());
    CHECK(res.error.empty());
  }
}

TEST_CASE("run_sweep: degenerate sweep equals run_simulation plus summarize") {
  StubContentProvider stub;
  SweepSpec spec;
  spec.base = ScenarioConfig{};
  spec.axes.push_back({"engagement.alpha", {0.3}});
  spec.replicate_seeds = {1234};

  auto results = run_sweep(spec, stub);
  REQUIRE(results.size() == 1);
  REQUIRE(results[0].summary.has_value());

  ScenarioConfig same = spec.base;
  same.engagement.alpha = 0.3;
  same.seed = 1234;
  auto direct = summarize(run_simulation(same, stub));

  const RunSummary& s = *results[0].summary;
  CHECK(s.final_e == direct.final_e);
  CHECK(s.mean_e == direct.mean_e);
  CHECK(s.min_e == direct.min_e);
  CHECK(s.max_e == direct.max_e);
  CHECK(s.mean_t_difficulty == direct.mean_t_difficulty);
  CHECK(s.total_agent_reward == direct.total_agent_reward);
  CHECK(s.steps_to_difficulty_stable == direct.steps_to_difficulty_stable);
}

TEST_CASE("run_sweep: mean engagement rises with alpha under a fixed schedule") {
  StubContentProvider stub;
  SweepSpec spec;
  spec.base = scripted_scenario(0, 100);
  spec.axes.push_back({"engagement.alpha", {0.05, 0.1, 0.2, 0.4}});
  auto results = run_sweep(spec, stub);
  REQUIRE(results.size() == 4);
  for (std::size_t i = 1; i < results.size(); ++i) {
    CHECK(results[i].summary->mean_e >= results[i - 1].summary->mean_e);
  }
}

TEST_CASE("run_sweep: a failing cell is recorded and the rest proceed") {
  StubContentProvider stub;
  SweepSpec spec;
  spec.base = scripted_scenario(0, 10);
  spec.axes.push_back({"adaptation.gamma", {-1.0, 0.5}});  // -1 breaks the kernel contract
  auto results = run_sweep(spec, stub);
  REQUIRE(results.size() == 2);
  CHECK_FALSE(results[0].summary.has_value());
  CHECK_FALSE(results[0].error.empty());
  CHECK(results[1].summary.has_value());
}

TEST_CASE("run_sweep: parallel execution matches sequential output") {
  StubContentProvider stub;
  SweepSpec spec;
  spec.base = ScenarioConfig{};
  spec.base.profile.stochastic = true;
  spec.axes.push_back({"engagement.alpha", {0.1, 0.2, 0.3}});
  spec.replicate_seeds = {1, 2, 3};
  auto sequential = run_sweep(spec, stub, 1);
  auto parallel = run_sweep(spec, stub, 8);
  REQUIRE(sequential.size() == parallel.size());
  for (std::size_t i = 0; i < sequential.size(); ++i) {
    CHECK(sequential[i].axis_values == parallel[i].axis_values);
    CHECK(sequential[i].seed == parallel[i].seed);
    REQUIRE(sequential[i].summary.has_value());
    REQUIRE(parallel[i].summary.has_value());
    CHECK(sequential[i].summary->mean_e == parallel[i].summary->mean_e);
    CHECK(sequential[i].summary->final_e == parallel[i].summary->final_e);
  }
}
