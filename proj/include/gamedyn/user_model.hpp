#pragma once

#include "gamedyn/random.hpp"

namespace gamedyn {

// Synthetic user. Performance is logistic in (skill - difficulty); the
// disengagement signal is flow-shaped: minimal while difficulty sits in the
// band [skill - boredom_margin, skill], rising linearly with frustration
// above it and boredom below it.
struct UserProfile {
  double skill = 5.0;               // latent ability, in difficulty units
  double steepness_k = 1.0;         // logistic steepness of the success curve
  double learn_rate = 0.05;         // skill growth rate, in [0, 1]
  double base_disengagement = 0.05; // d0, baseline pull on engagement
  double frustration_coeff = 0.1;   // slope above the flow band
  double boredom_coeff = 0.05;      // slope below the flow band
  double boredom_margin = 1.0;      // width of the flow band, difficulty units
  double initial_engagement = 0.5;  // starting engagement level
  bool stochastic = false;          // Bernoulli-sampled vs expected-value performance
};

// Success measure on a task of difficulty t_cur. Deterministic mode returns
// the logistic success probability sigma(k*(skill - t_cur)) and ignores rng;
// stochastic mode returns a Bernoulli draw at that probability.
double performance(const UserProfile& profile, double t_cur, RandomStream& rng);

// Disengagement signal d0 + frustration + boredom at difficulty t_cur.
double disengagement(const UserProfile& profile, double t_cur);

// Skill growth from succeeding at tasks above the current skill:
// skill' = skill + learn_rate * u * max(0, t_cur - skill). Never decreases.
UserProfile update_skill(const UserProfile& profile, double u, double t_cur);

}  // namespace gamedyn
