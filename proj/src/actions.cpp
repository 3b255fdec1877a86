#include "gamedyn/actions.hpp"

namespace gamedyn {

ActionCatalog default_actions() {
  return {
      {"NoOp", 0.0, 0.0, 0.0, 0.0, false},
      {"EaseTask", -0.5, 0.0, 0.2, 0.1, false},
      {"HardenTask", 0.5, 0.0, 0.6, 0.4, false},
      {"GrantBonus", 0.0, 0.3, 0.5, 0.5, false},
      {"SendEncouragement", 0.0, 0.15, 0.4, 0.2, true},
  };
}

int noop_index(const ActionCatalog& actions) {
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i].name == "NoOp") {
      return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace gamedyn
