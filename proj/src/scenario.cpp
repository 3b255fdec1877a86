#include "gamedyn/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "gamedyn/errors.hpp"

namespace gamedyn {

using nlohmann::json;

namespace {

void add_issue(ValidationReport& report, std::string path, std::string message) {
  report.issues.push_back({std::move(path), std::move(message)});
}

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

// ---- JSON reading -------------------------------------------------------

void check_known_keys(const json& obj, const std::string& base,
                      std::initializer_list<const char*> keys, ValidationReport& report) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      add_issue(report, join_path(base, item.key()), "unknown key");
    }
  }
}

void read_double(const json& obj, const std::string& base, const char* key, double& out,
                 ValidationReport& report) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_number()) {
    add_issue(report, join_path(base, key), "must be a number");
    return;
  }
  out = it->get<double>();
}

void read_int(const json& obj, const std::string& base, const char* key, int& out,
              ValidationReport& report) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_number_integer()) {
    add_issue(report, join_path(base, key), "must be an integer");
    return;
  }
  out = it->get<int>();
}

void read_u64(const json& obj, const std::string& base, const char* key, std::uint64_t& out,
              ValidationReport& report) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0)) {
    add_issue(report, join_path(base, key), "must be a non-negative integer");
    return;
  }
  out = it->get<std::uint64_t>();
}

void read_bool(const json& obj, const std::string& base, const char* key, bool& out,
               ValidationReport& report) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_boolean()) {
    add_issue(report, join_path(base, key), "must be a boolean");
    return;
  }
  out = it->get<bool>();
}

void read_string(const json& obj, const std::string& base, const char* key, std::string& out,
                 ValidationReport& report) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_string()) {
    add_issue(report, join_path(base, key), "must be a string");
    return;
  }
  out = it->get<std::string>();
}

void read_engagement(const json& obj, EngagementParams& p, ValidationReport& report) {
  check_known_keys(obj, "engagement", {"alpha", "beta", "step_size"}, report);
  read_double(obj, "engagement", "alpha", p.alpha, report);
  read_double(obj, "engagement", "beta", p.beta, report);
  read_double(obj, "engagement", "step_size", p.step_size, report);
}

void read_adaptation(const json& obj, AdaptationParams& p, ValidationReport& report) {
  check_known_keys(obj, "adaptation", {"gamma", "t_min", "t_max", "s_target"}, report);
  read_double(obj, "adaptation", "gamma", p.gamma, report);
  read_double(obj, "adaptation", "t_min", p.t_min, report);
  read_double(obj, "adaptation", "t_max", p.t_max, report);
  read_double(obj, "adaptation", "s_target", p.s_target, report);
}

void read_profile(const json& obj, UserProfile& p, ValidationReport& report) {
  check_known_keys(obj, "profile",
                   {"skill", "steepness_k", "learn_rate", "base_disengagement",
                    "frustration_coeff", "boredom_coeff", "boredom_margin",
                    "initial_engagement", "stochastic"},
                   report);
  read_double(obj, "profile", "skill", p.skill, report);
  read_double(obj, "profile", "steepness_k", p.steepness_k, report);
  read_double(obj, "profile", "learn_rate", p.learn_rate, report);
  read_double(obj, "profile", "base_disengagement", p.base_disengagement, report);
  read_double(obj, "profile", "frustration_coeff", p.frustration_coeff, report);
  read_double(obj, "profile", "boredom_coeff", p.boredom_coeff, report);
  read_double(obj, "profile", "boredom_margin", p.boredom_margin, report);
  read_double(obj, "profile", "initial_engagement", p.initial_engagement, report);
  read_bool(obj, "profile", "stochastic", p.stochastic, report);
}

void read_reward_weights(const json& obj, RewardWeights& w, ValidationReport& report) {
  check_known_keys(obj, "reward_weights", {"w1", "w2"}, report);
  read_double(obj, "reward_weights", "w1", w.w1, report);
  read_double(obj, "reward_weights", "w2", w.w2, report);
}

void read_rl(const json& obj, RLConfig& cfg, ValidationReport& report) {
  check_known_keys(obj, "rl",
                   {"discount_delta", "learn_eta", "epsilon_start", "epsilon_end",
                    "epsilon_decay_steps", "e_bins", "t_bins", "shaping_rho"},
                   report);
  read_double(obj, "rl", "discount_delta", cfg.discount_delta, report);
  read_double(obj, "rl", "learn_eta", cfg.learn_eta, report);
  read_double(obj, "rl", "epsilon_start", cfg.epsilon_start, report);
  read_double(obj, "rl", "epsilon_end", cfg.epsilon_end, report);
  read_int(obj, "rl", "epsilon_decay_steps", cfg.epsilon_decay_steps, report);
  read_int(obj, "rl", "e_bins", cfg.e_bins, report);
  read_int(obj, "rl", "t_bins", cfg.t_bins, report);
  read_double(obj, "rl", "shaping_rho", cfg.shaping_rho, report);
}

void read_actions(const json& arr, ActionCatalog& actions, ValidationReport& report) {
  if (!arr.is_array()) {
    add_issue(report, "actions", "must be an array");
    return;
  }
  actions.clear();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string base = "actions[" + std::to_string(i) + "]";
    const json& item = arr[i];
    if (!item.is_object()) {
      add_issue(report, base, "must be an object");
      continue;
    }
    check_known_keys(item, base,
                     {"name", "difficulty_delta", "reward_bonus", "gain", "cost",
                      "send_feedback"},
                     report);
    ActionSpec spec;
    read_string(item, base, "name", spec.name, report);
    read_double(item, base, "difficulty_delta", spec.difficulty_delta, report);
    read_double(item, base, "reward_bonus", spec.reward_bonus, report);
    read_double(item, base, "gain", spec.gain, report);
    read_double(item, base, "cost", spec.cost, report);
    read_bool(item, base, "send_feedback", spec.send_feedback, report);
    actions.push_back(std::move(spec));
  }
}

bool parse_policy_mode(const std::string& text, PolicyMode& out) {
  if (text == "epsilon-greedy") out = PolicyMode::EpsilonGreedy;
  else if (text == "greedy") out = PolicyMode::Greedy;
  else if (text == "noop") out = PolicyMode::NoOp;
  else if (text == "scripted") out = PolicyMode::Scripted;
  else return false;
  return true;
}

// ---- numeric validation rules ------------------------------------------

void require_rule(ValidationReport& report, bool ok, const char* path, const char* rule) {
  if (!ok) {
    add_issue(report, path, std::string("must satisfy ") + rule);
  }
}

bool finite(double v) { return std::isfinite(v); }

// ---- sweep parameter table ----------------------------------------------

struct ParamEntry {
  const char* path;
  std::function<double&(ScenarioConfig&)> ref;
};

const std::vector<ParamEntry>& param_table() {
  static const std::vector<ParamEntry> table = {
      {"initial_difficulty", [](ScenarioConfig& c) -> double& { return c.initial_difficulty; }},
      {"engagement.alpha", [](ScenarioConfig& c) -> double& { return c.engagement.alpha; }},
      {"engagement.beta", [](ScenarioConfig& c) -> double& { return c.engagement.beta; }},
      {"engagement.step_size", [](ScenarioConfig& c) -> double& { return c.engagement.step_size; }},
      {"adaptation.gamma", [](ScenarioConfig& c) -> double& { return c.adaptation.gamma; }},
      {"adaptation.t_min", [](ScenarioConfig& c) -> double& { return c.adaptation.t_min; }},
      {"adaptation.t_max", [](ScenarioConfig& c) -> double& { return c.adaptation.t_max; }},
      {"adaptation.s_target", [](ScenarioConfig& c) -> double& { return c.adaptation.s_target; }},
      {"profile.skill", [](ScenarioConfig& c) -> double& { return c.profile.skill; }},
      {"profile.steepness_k", [](ScenarioConfig& c) -> double& { return c.profile.steepness_k; }},
      {"profile.learn_rate", [](ScenarioConfig& c) -> double& { return c.profile.learn_rate; }},
      {"profile.base_disengagement",
       [](ScenarioConfig& c) -> double& { return c.profile.base_disengagement; }},
      {"profile.frustration_coeff",
       [](ScenarioConfig& c) -> double& { return c.profile.frustration_coeff; }},
      {"profile.boredom_coeff",
       [](ScenarioConfig& c) -> double& { return c.profile.boredom_coeff; }},
      {"profile.boredom_margin",
       [](ScenarioConfig& c) -> double& { return c.profile.boredom_margin; }},
      {"profile.initial_engagement",
       [](ScenarioConfig& c) -> double& { return c.profile.initial_engagement; }},
      {"reward_weights.w1", [](ScenarioConfig& c) -> double& { return c.reward_weights.w1; }},
      {"reward_weights.w2", [](ScenarioConfig& c) -> double& { return c.reward_weights.w2; }},
      {"rl.discount_delta", [](ScenarioConfig& c) -> double& { return c.rl.discount_delta; }},
      {"rl.learn_eta", [](ScenarioConfig& c) -> double& { return c.rl.learn_eta; }},
      {"rl.epsilon_start", [](ScenarioConfig& c) -> double& { return c.rl.epsilon_start; }},
      {"rl.epsilon_end", [](ScenarioConfig& c) -> double& { return c.rl.epsilon_end; }},
      {"rl.shaping_rho", [](ScenarioConfig& c) -> double& { return c.rl.shaping_rho; }},
  };
  return table;
}

const ParamEntry* find_param(const std::string& path) {
  for (const auto& entry : param_table()) {
    if (path == entry.path) {
      return &entry;
    }
  }
  return nullptr;
}

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

bool parse_number(const std::string& text, double& out) {
  std::string t = trim(text);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size() && std::isfinite(out);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

}  // namespace

const char* to_string(PolicyMode mode) {
  switch (mode) {
    case PolicyMode::EpsilonGreedy: return "epsilon-greedy";
    case PolicyMode::Greedy: return "greedy";
    case PolicyMode::NoOp: return "noop";
    case PolicyMode::Scripted: return "scripted";
  }
  return "epsilon-greedy";
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& issue : issues) {
    out << issue.path << ": " << issue.message << "\n";
  }
  return out.str();
}

ValidationReport validate(const ScenarioConfig& c) {
  ValidationReport report;

  require_rule(report, c.horizon >= 1, "horizon", "horizon >= 1");

  const auto& e = c.engagement;
  require_rule(report, finite(e.alpha) && e.alpha >= 0.0, "engagement.alpha", "alpha >= 0");
  require_rule(report, finite(e.beta) && e.beta >= 0.0, "engagement.beta", "beta >= 0");
  require_rule(report, finite(e.step_size) && e.step_size > 0.0, "engagement.step_size",
               "step_size > 0");

  const auto& a = c.adaptation;
  require_rule(report, finite(a.gamma) && a.gamma >= 0.0, "adaptation.gamma", "gamma >= 0");
  require_rule(report, finite(a.t_min) && finite(a.t_max) && a.t_min < a.t_max,
               "adaptation.t_min", "t_min < t_max");
  require_rule(report, finite(a.s_target) && a.s_target > 0.0 && a.s_target < 1.0,
               "adaptation.s_target", "0 < s_target < 1");

  bool bounds_ok = finite(a.t_min) && finite(a.t_max) && a.t_min < a.t_max;
  require_rule(report,
               finite(c.initial_difficulty) &&
                   (!bounds_ok ||
                    (c.initial_difficulty >= a.t_min && c.initial_difficulty <= a.t_max)),
               "initial_difficulty", "t_min <= initial_difficulty <= t_max");

  const auto& p = c.profile;
  require_rule(report,
               finite(p.skill) && (!bounds_ok || (p.skill >= a.t_min && p.skill <= a.t_max)),
               "profile.skill", "t_min <= skill <= t_max");
  require_rule(report, finite(p.steepness_k) && p.steepness_k > 0.0, "profile.steepness_k",
               "steepness_k > 0");
  require_rule(report, finite(p.learn_rate) && p.learn_rate >= 0.0 && p.learn_rate <= 1.0,
               "profile.learn_rate", "0 <= learn_rate <= 1");
  require_rule(report, finite(p.base_disengagement) && p.base_disengagement >= 0.0,
               "profile.base_disengagement", "base_disengagement >= 0");
  require_rule(report, finite(p.frustration_coeff) && p.frustration_coeff >= 0.0,
               "profile.frustration_coeff", "frustration_coeff >= 0");
  require_rule(report, finite(p.boredom_coeff) && p.boredom_coeff >= 0.0,
               "profile.boredom_coeff", "boredom_coeff >= 0");
  require_rule(report, finite(p.boredom_margin) && p.boredom_margin >= 0.0,
               "profile.boredom_margin", "boredom_margin >= 0");
  require_rule(report,
               finite(p.initial_engagement) && p.initial_engagement >= 0.0 &&
                   p.initial_engagement <= 1.0,
               "profile.initial_engagement", "0 <= initial_engagement <= 1");

  const auto& w = c.reward_weights;
  require_rule(report, finite(w.w1) && w.w1 > 0.0, "reward_weights.w1", "w1 > 0");
  require_rule(report, finite(w.w2) && w.w2 > 0.0, "reward_weights.w2", "w2 > 0");

  const auto& r = c.rl;
  require_rule(report, finite(r.discount_delta) && r.discount_delta >= 0.0 &&
                           r.discount_delta < 1.0,
               "rl.discount_delta", "0 <= discount_delta < 1");
  require_rule(report, finite(r.learn_eta) && r.learn_eta > 0.0 && r.learn_eta <= 1.0,
               "rl.learn_eta", "0 < learn_eta <= 1");
  bool eps_ok = finite(r.epsilon_start) && finite(r.epsilon_end) && r.epsilon_end >= 0.0 &&
                r.epsilon_start <= 1.0 && r.epsilon_end <= r.epsilon_start;
  require_rule(report, eps_ok, "rl.epsilon_start", "0 <= epsilon_end <= epsilon_start <= 1");
  require_rule(report, r.epsilon_decay_steps >= 1, "rl.epsilon_decay_steps",
               "epsilon_decay_steps >= 1");
  require_rule(report, r.e_bins >= 1, "rl.e_bins", "e_bins >= 1");
  require_rule(report, r.t_bins >= 1, "rl.t_bins", "t_bins >= 1");
  require_rule(report, finite(r.shaping_rho), "rl.shaping_rho", "shaping_rho finite");

  require_rule(report, !c.actions.empty(), "actions", "at least one action");
  for (std::size_t i = 0; i < c.actions.size(); ++i) {
    std::string base = "actions[" + std::to_string(i) + "]";
    const auto& act = c.actions[i];
    require_rule(report, !act.name.empty(), (base + ".name").c_str(), "non-empty name");
    require_rule(report, finite(act.difficulty_delta), (base + ".difficulty_delta").c_str(),
                 "finite difficulty_delta");
    require_rule(report, finite(act.reward_bonus), (base + ".reward_bonus").c_str(),
                 "finite reward_bonus");
    require_rule(report, finite(act.gain), (base + ".gain").c_str(), "finite gain");
    require_rule(report, finite(act.cost), (base + ".cost").c_str(), "finite cost");
  }

  if (c.policy_mode == PolicyMode::Scripted) {
    require_rule(report, static_cast<int>(c.script.size()) >= c.horizon, "script",
                 "script length >= horizon when policy_mode is scripted");
    for (std::size_t i = 0; i < c.script.size(); ++i) {
      if (c.script[i] < 0 || c.script[i] >= static_cast<int>(c.actions.size())) {
        add_issue(report, "script[" + std::to_string(i) + "]",
                  "must satisfy 0 <= action index < actions length");
      }
    }
  }
  if (c.policy_mode == PolicyMode::NoOp) {
    require_rule(report, noop_index(c.actions) >= 0, "actions",
                 "an action named NoOp is required when policy_mode is noop");
  }

  return report;
}

std::string serialize(const ScenarioConfig& c) {
  json j;
  j["name"] = c.name;
  j["horizon"] = c.horizon;
  j["seed"] = c.seed;
  j["initial_difficulty"] = c.initial_difficulty;
  j["engagement"] = {
      {"alpha", c.engagement.alpha},
      {"beta", c.engagement.beta},
      {"step_size", c.engagement.step_size},
  };
  j["adaptation"] = {
      {"gamma", c.adaptation.gamma},
      {"t_min", c.adaptation.t_min},
      {"t_max", c.adaptation.t_max},
      {"s_target", c.adaptation.s_target},
  };
  j["profile"] = {
      {"skill", c.profile.skill},
      {"steepness_k", c.profile.steepness_k},
      {"learn_rate", c.profile.learn_rate},
      {"base_disengagement", c.profile.base_disengagement},
      {"frustration_coeff", c.profile.frustration_coeff},
      {"boredom_coeff", c.profile.boredom_coeff},
      {"boredom_margin", c.profile.boredom_margin},
      {"initial_engagement", c.profile.initial_engagement},
      {"stochastic", c.profile.stochastic},
  };
  j["reward_weights"] = {{"w1", c.reward_weights.w1}, {"w2", c.reward_weights.w2}};
  j["rl"] = {
      {"discount_delta", c.rl.discount_delta},
      {"learn_eta", c.rl.learn_eta},
      {"epsilon_start", c.rl.epsilon_start},
      {"epsilon_end", c.rl.epsilon_end},
      {"epsilon_decay_steps", c.rl.epsilon_decay_steps},
      {"e_bins", c.rl.e_bins},
      {"t_bins", c.rl.t_bins},
      {"shaping_rho", c.rl.shaping_rho},
  };
  json actions = json::array();
  for (const auto& act : c.actions) {
    actions.push_back({
        {"name", act.name},
        {"difficulty_delta", act.difficulty_delta},
        {"reward_bonus", act.reward_bonus},
        {"gain", act.gain},
        {"cost", act.cost},
        {"send_feedback", act.send_feedback},
    });
  }
  j["actions"] = std::move(actions);
  j["policy_mode"] = to_string(c.policy_mode);
  j["script"] = c.script;
  j["use_remote_llm"] = c.use_remote_llm;
  return j.dump(2) + "\n";
}

LoadResult load_scenario(const std::string& text) {
  LoadResult result;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& error) {
    // Convert the byte offset into a line/column position.
    std::size_t byte = error.byte;
    std::size_t line = 1;
    std::size_t last_newline = 0;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        last_newline = i + 1;
      }
    }
    std::size_t column = (byte >= last_newline ? byte - last_newline : 0) + 1;
    add_issue(result.report, "$",
              "parse error at line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + error.what());
    return result;
  }

  if (!root.is_object()) {
    add_issue(result.report, "$", "document root must be a JSON object");
    return result;
  }

  ScenarioConfig config;
  ValidationReport& report = result.report;

  check_known_keys(root, "",
                   {"name", "horizon", "seed", "initial_difficulty", "engagement",
                    "adaptation", "profile", "reward_weights", "rl", "actions",
                    "policy_mode", "script", "use_remote_llm"},
                   report);

  read_string(root, "", "name", config.name, report);
  read_int(root, "", "horizon", config.horizon, report);
  read_u64(root, "", "seed", config.seed, report);
  read_double(root, "", "initial_difficulty", config.initial_difficulty, report);

  if (auto it = root.find("engagement"); it != root.end()) {
    if (it->is_object()) read_engagement(*it, config.engagement, report);
    else add_issue(report, "engagement", "must be an object");
  }
  if (auto it = root.find("adaptation"); it != root.end()) {
    if (it->is_object()) read_adaptation(*it, config.adaptation, report);
    else add_issue(report, "adaptation", "must be an object");
  }
  if (auto it = root.find("profile"); it != root.end()) {
    if (it->is_object()) read_profile(*it, config.profile, report);
    else add_issue(report, "profile", "must be an object");
  }
  if (auto it = root.find("reward_weights"); it != root.end()) {
    if (it->is_object()) read_reward_weights(*it, config.reward_weights, report);
    else add_issue(report, "reward_weights", "must be an object");
  }
  if (auto it = root.find("rl"); it != root.end()) {
    if (it->is_object()) read_rl(*it, config.rl, report);
    else add_issue(report, "rl", "must be an object");
  }
  if (auto it = root.find("actions"); it != root.end()) {
    read_actions(*it, config.actions, report);
  }
  if (auto it = root.find("policy_mode"); it != root.end()) {
    if (!it->is_string() || !parse_policy_mode(it->get<std::string>(), config.policy_mode)) {
      add_issue(report, "policy_mode",
                "must be one of epsilon-greedy, greedy, noop, scripted");
    }
  }
  if (auto it = root.find("script"); it != root.end()) {
    if (!it->is_array()) {
      add_issue(report, "script", "must be an array of action indices");
    } else {
      config.script.clear();
      for (std::size_t i = 0; i < it->size(); ++i) {
        const json& v = (*it)[i];
        if (!v.is_number_integer()) {
          add_issue(report, "script[" + std::to_string(i) + "]", "must be an integer");
        } else {
          config.script.push_back(v.get<int>());
        }
      }
    }
  }
  read_bool(root, "", "use_remote_llm", config.use_remote_llm, report);

  ValidationReport semantic = validate(config);
  for (auto& issue : semantic.issues) {
    report.issues.push_back(std::move(issue));
  }

  if (report.ok()) {
    result.config = std::move(config);
  }
  return result;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"education", "healthcare", "retail",
                                                 "corporate", "entertainment"};
  return names;
}

// Preset values are engineering defaults expressing each industry's emphasis;
// they are not measured data.
ScenarioConfig preset(const std::string& name) {
  ScenarioConfig c;
  c.name = name;
  if (name == "education") {
    // Fast content adaptation and visible learning.
    c.adaptation.gamma = 0.8;
    c.profile.learn_rate = 0.1;
  } else if (name == "healthcare") {
    // Compliance risk: disengagement weighs heavier, easier target.
    c.engagement.beta = 0.2;
    c.profile.frustration_coeff = 0.15;
    c.adaptation.s_target = 0.65;
  } else if (name == "retail") {
    // Reward-driven loyalty: gains dominate costs.
    c.reward_weights.w1 = 1.5;
    c.engagement.alpha = 0.3;
  } else if (name == "corporate") {
    // Scenario training: sharper skill gate, higher mastery bar.
    c.profile.steepness_k = 1.5;
    c.adaptation.s_target = 0.75;
    c.adaptation.gamma = 0.6;
  } else if (name == "entertainment") {
    // Immersion: engaged start, boredom is the main threat.
    c.profile.initial_engagement = 0.7;
    c.profile.base_disengagement = 0.03;
    c.profile.boredom_coeff = 0.08;
    c.engagement.alpha = 0.25;
  } else {
    std::string valid;
    for (const auto& n : preset_names()) {
      if (!valid.empty()) valid += ", ";
      valid += n;
    }
    throw InvalidInputError("unknown preset '" + name + "'; valid names: " + valid);
  }
  return c;
}

const std::vector<std::string>& sweep_paths() {
  static const std::vector<std::string> paths = [] {
    std::vector<std::string> out;
    for (const auto& entry : param_table()) {
      out.push_back(entry.path);
    }
    return out;
  }();
  return paths;
}

double get_param(const ScenarioConfig& config, const std::string& path) {
  const ParamEntry* entry = find_param(path);
  if (entry == nullptr) {
    throw InvalidInputError("unknown parameter path '" + path + "'");
  }
  return entry->ref(const_cast<ScenarioConfig&>(config));
}

void set_param(ScenarioConfig& config, const std::string& path, double value) {
  const ParamEntry* entry = find_param(path);
  if (entry == nullptr) {
    throw InvalidInputError("unknown parameter path '" + path + "'");
  }
  if (!std::isfinite(value)) {
    throw InvalidInputError("parameter '" + path + "' must be finite");
  }
  entry->ref(config) = value;
}

SweepAxis parse_sweep_axis(const std::string& spec) {
  auto eq = spec.find('=');
  if (eq == std::string::npos) {
    throw InvalidInputError("sweep axis '" + spec + "' must look like path=values");
  }
  SweepAxis axis;
  axis.path = trim(spec.substr(0, eq));
  if (find_param(axis.path) == nullptr) {
    throw InvalidInputError("unknown parameter path '" + axis.path + "'");
  }
  std::string rest = trim(spec.substr(eq + 1));
  if (rest.empty()) {
    throw InvalidInputError("sweep axis '" + spec + "' has no values");
  }

  if (rest.find(':') != std::string::npos) {
    auto parts = split(rest, ':');
    if (parts.size() != 3) {
      throw InvalidInputError("range '" + rest + "' must be start:stop:step");
    }
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    if (!parse_number(parts[0], start) || !parse_number(parts[1], stop) ||
        !parse_number(parts[2], step)) {
      throw InvalidInputError("range '" + rest + "' has a non-numeric bound");
    }
    if (step == 0.0) {
      throw InvalidInputError("zero step in range '" + rest + "'");
    }
    double span = (stop - start) / step;
    if (span < -1e-9) {
      throw InvalidInputError("empty range '" + rest + "'");
    }
    long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    if (count > 1000000) {
      throw InvalidInputError("range '" + rest + "' enumerates too many values");
    }
    for (long i = 0; i < count; ++i) {
      axis.values.push_back(start + static_cast<double>(i) * step);
    }
  } else {
    for (const auto& fragment : split(rest, ',')) {
      double value = 0.0;
      if (!parse_number(fragment, value)) {
        throw InvalidInputError("value '" + fragment + "' is not a number");
      }
      axis.values.push_back(value);
    }
  }
  return axis;
}

}  // namespace gamedyn
