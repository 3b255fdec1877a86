#pragma once

#include <vector>

#include "gamedyn/random.hpp"

namespace gamedyn {

struct RLConfig {
  double discount_delta = 0.9;   // discount factor, in [0, 1)
  double learn_eta = 1.0;        // learning rate, in (0, 1]; 1 overwrites with the target
  double epsilon_start = 1.0;    // exploration rate at step 0
  double epsilon_end = 0.05;     // exploration floor
  int epsilon_decay_steps = 50;  // linear decay horizon
  int e_bins = 10;               // engagement discretization bins
  int t_bins = 10;               // difficulty discretization bins
  double shaping_rho = 0.0;      // weight on the engagement delta added to the agent reward
};

// Dense state x action value table for the tabular agent.
class QTable {
 public:
  QTable(int n_states, int n_actions);

  int n_states() const { return n_states_; }
  int n_actions() const { return n_actions_; }

  double at(int s, int a) const;
  void set(int s, int a, double v);

  // Largest value in row s.
  double max_value(int s) const;
  // Index of the largest value in row s; ties break to the lowest index.
  int best_action(int s) const;

 private:
  void check_indices(int s, int a) const;

  int n_states_;
  int n_actions_;
  std::vector<double> values_;
};

// Map (engagement, difficulty) onto a flat state index over a uniform
// e_bins x t_bins grid. Top boundary values fall into the last bin.
int discretize_state(double e, double t_cur, double t_min, double t_max,
                     int e_bins, int t_bins);

// Q[s,a] <- (1-eta)*Q[s,a] + eta*(r + delta*max_a' Q[s_next,a']).
// eta = 1 reduces to plain Bellman replacement.
void q_update(QTable& q, int s, int a, double r, int s_next, const RLConfig& cfg);

// Epsilon-greedy selection: with probability epsilon a uniform random action,
// otherwise the greedy action (lowest index among ties).
int select_action(const QTable& q, int s, double epsilon, RandomStream& rng);

// Linear decay from epsilon_start to epsilon_end over epsilon_decay_steps,
// constant afterward.
double epsilon_at(const RLConfig& cfg, int t);

}  // namespace gamedyn
