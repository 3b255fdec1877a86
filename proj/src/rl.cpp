#include "gamedyn/rl.hpp"

#include <algorithm>
#include <cmath>

#include "gamedyn/errors.hpp"

namespace gamedyn {

QTable::QTable(int n_states, int n_actions)
    : n_states_(n_states), n_actions_(n_actions) {
  if (n_states <= 0 || n_actions <= 0) {
    throw PreconditionError("QTable dimensions must be positive");
  }
  values_.assign(static_cast<std::size_t>(n_states) * static_cast<std::size_t>(n_actions), 0.0);
}

void QTable::check_indices(int s, int a) const {
  if (s < 0 || s >= n_states_) {
    throw PreconditionError("state index out of range");
  }
  if (a < 0 || a >= n_actions_) {
    throw PreconditionError("action index out of range");
  }
}

double QTable::at(int s, int a) const {
  check_indices(s, a);
  return values_[static_cast<std::size_t>(s) * n_actions_ + a];
}

void QTable::set(int s, int a, double v) {
  check_indices(s, a);
  if (!std::isfinite(v)) {
    throw InvalidInputError("Q value must be finite");
  }
  values_[static_cast<std::size_t>(s) * n_actions_ + a] = v;
}

double QTable::max_value(int s) const {
  check_indices(s, 0);
  const double* row = &values_[static_cast<std::size_t>(s) * n_actions_];
  return *std::max_element(row, row + n_actions_);
}

int QTable::best_action(int s) const {
  check_indices(s, 0);
  const double* row = &values_[static_cast<std::size_t>(s) * n_actions_];
  int best = 0;
  for (int a = 1; a < n_actions_; ++a) {
    if (row[a] > row[best]) {
      best = a;
    }
  }
  return best;
}

int discretize_state(double e, double t_cur, double t_min, double t_max,
                     int e_bins, int t_bins) {
  if (!std::isfinite(e) || !std::isfinite(t_cur) || !std::isfinite(t_min) ||
      !std::isfinite(t_max)) {
    throw InvalidInputError("discretize_state: inputs must be finite");
  }
  if (e_bins <= 0 || t_bins <= 0 || t_min >= t_max) {
    throw PreconditionError("discretize_state: invalid grid");
  }
  if (e < 0.0 || e > 1.0) {
    throw PreconditionError("discretize_state: e out of [0, 1]");
  }
  if (t_cur < t_min || t_cur > t_max) {
    throw PreconditionError("discretize_state: t_cur out of bounds");
  }
  int e_bin = std::min(static_cast<int>(e * e_bins), e_bins - 1);
  double t_frac = (t_cur - t_min) / (t_max - t_min);
  int t_bin = std::min(static_cast<int>(t_frac * t_bins), t_bins - 1);
  return e_bin * t_bins + t_bin;
}

void q_update(QTable& q, int s, int a, double r, int s_next, const RLConfig& cfg) {
  if (!std::isfinite(r)) {
    throw InvalidInputError("q_update: reward must be finite");
  }
  if (cfg.discount_delta < 0.0 || cfg.discount_delta >= 1.0 ||
      cfg.learn_eta <= 0.0 || cfg.learn_eta > 1.0) {
    throw PreconditionError("q_update: invalid RL config");
  }
  double target = r + cfg.discount_delta * q.max_value(s_next);
  q.set(s, a, (1.0 - cfg.learn_eta) * q.at(s, a) + cfg.learn_eta * target);
}

int select_action(const QTable& q, int s, double epsilon, RandomStream& rng) {
  if (s < 0 || s >= q.n_states()) {
    throw PreconditionError("select_action: state index out of range");
  }
  if (!std::isfinite(epsilon) || epsilon < 0.0 || epsilon > 1.0) {
    throw PreconditionError("select_action: epsilon out of [0, 1]");
  }
  if (rng.next_unit() < epsilon) {
    return static_cast<int>(rng.next_index(static_cast<std::size_t>(q.n_actions())));
  }
  return q.best_action(s);
}

double epsilon_at(const RLConfig& cfg, int t) {
  if (t <= 0) {
    return cfg.epsilon_start;
  }
  if (t >= cfg.epsilon_decay_steps) {
    return cfg.epsilon_end;
  }
  double frac = static_cast<double>(t) / static_cast<double>(cfg.epsilon_decay_steps);
  return cfg.epsilon_start + (cfg.epsilon_end - cfg.epsilon_start) * frac;
}

}  // namespace gamedyn
