#pragma once

#include <string>
#include <vector>

namespace gamedyn {

// One system intervention the agent can pick each step.
struct ActionSpec {
  std::string name;
  double difficulty_delta = 0.0;  // applied to the task before the user attempts it
  double reward_bonus = 0.0;      // additive term on the engagement reward signal
  double gain = 0.0;              // long-term gain G(a)
  double cost = 0.0;              // immediate cost C(a)
  bool send_feedback = false;     // route a message through the content port

  bool operator==(const ActionSpec&) const = default;
};

using ActionCatalog = std::vector<ActionSpec>;

// The five stock interventions. All values are scenario-configurable defaults.
ActionCatalog default_actions();

// Index of the catalog entry named "NoOp", or -1 when absent.
int noop_index(const ActionCatalog& actions);

}  // namespace gamedyn
