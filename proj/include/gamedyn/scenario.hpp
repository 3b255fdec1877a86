#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamedyn/actions.hpp"
#include "gamedyn/dynamics.hpp"
#include "gamedyn/rl.hpp"
#include "gamedyn/user_model.hpp"

namespace gamedyn {

enum class PolicyMode { EpsilonGreedy, Greedy, NoOp, Scripted };

const char* to_string(PolicyMode mode);

// Complete description of one simulation run. Defaults give a valid
// 100-step scenario out of the box.
struct ScenarioConfig {
  std::string name = "default";
  int horizon = 100;
  std::uint64_t seed = 42;
  double initial_difficulty = 5.0;
  EngagementParams engagement;
  AdaptationParams adaptation;
  UserProfile profile;
  RewardWeights reward_weights;
  RLConfig rl;
  ActionCatalog actions = default_actions();
  PolicyMode policy_mode = PolicyMode::EpsilonGreedy;
  std::vector<int> script;  // per-step action indices, used when policy_mode == Scripted
  bool use_remote_llm = false;
};

struct ValidationIssue {
  std::string path;     // dotted field path, e.g. "engagement.alpha"
  std::string message;  // the violated rule
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

struct LoadResult {
  std::optional<ScenarioConfig> config;  // set iff report.ok()
  ValidationReport report;
};

// Parse and validate a JSON scenario document. Never throws on bad input:
// parse errors and every violated invariant come back in the report.
// Omitted fields take the documented defaults; unknown keys are rejected.
LoadResult load_scenario(const std::string& text);

// Canonical JSON form; load_scenario(serialize(c)) reproduces c exactly.
std::string serialize(const ScenarioConfig& config);

// Check every invariant of an in-memory config.
ValidationReport validate(const ScenarioConfig& config);

// Named industry presets. Throws InvalidInputError listing the valid names.
ScenarioConfig preset(const std::string& name);
const std::vector<std::string>& preset_names();

struct SweepAxis {
  std::string path;
  std::vector<double> values;
};

struct SweepSpec {
  ScenarioConfig base;
  std::vector<SweepAxis> axes;
  std::vector<std::uint64_t> replicate_seeds;  // empty means one replicate at base.seed
};

// Parse "path=start:stop:step" (inclusive range) or "path=v1,v2,...".
// Throws InvalidInputError naming the offending fragment.
SweepAxis parse_sweep_axis(const std::string& spec);

// Dotted paths of all numeric fields a sweep may vary.
const std::vector<std::string>& sweep_paths();

double get_param(const ScenarioConfig& config, const std::string& path);
void set_param(ScenarioConfig& config, const std::string& path, double value);

}  // namespace gamedyn
