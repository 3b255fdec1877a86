#include "gamedyn/user_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gamedyn/errors.hpp"

namespace gamedyn {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidInputError(std::string(name) + " must be finite");
  }
}

void check_profile(const UserProfile& p) {
  require_finite(p.skill, "skill");
  require_finite(p.steepness_k, "steepness_k");
  require_finite(p.learn_rate, "learn_rate");
  require_finite(p.base_disengagement, "base_disengagement");
  require_finite(p.frustration_coeff, "frustration_coeff");
  require_finite(p.boredom_coeff, "boredom_coeff");
  require_finite(p.boredom_margin, "boredom_margin");
  require_finite(p.initial_engagement, "initial_engagement");
  if (p.steepness_k <= 0.0 || p.learn_rate < 0.0 || p.learn_rate > 1.0 ||
      p.base_disengagement < 0.0 || p.frustration_coeff < 0.0 ||
      p.boredom_coeff < 0.0 || p.boredom_margin < 0.0 ||
      p.initial_engagement < 0.0 || p.initial_engagement > 1.0) {
    throw PreconditionError("invalid user profile");
  }
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

double performance(const UserProfile& profile, double t_cur, RandomStream& rng) {
  check_profile(profile);
  require_finite(t_cur, "t_cur");
  double p = logistic(profile.steepness_k * (profile.skill - t_cur));
  if (!profile.stochastic) {
    return p;
  }
  return rng.next_unit() < p ? 1.0 : 0.0;
}

double disengagement(const UserProfile& profile, double t_cur) {
  check_profile(profile);
  require_finite(t_cur, "t_cur");
  double frustration = std::max(0.0, t_cur - profile.skill);
  double boredom = std::max(0.0, profile.skill - t_cur - profile.boredom_margin);
  return profile.base_disengagement + profile.frustration_coeff * frustration +
         profile.boredom_coeff * boredom;
}

UserProfile update_skill(const UserProfile& profile, double u, double t_cur) {
  check_profile(profile);
  require_finite(u, "u");
  require_finite(t_cur, "t_cur");
  if (u < 0.0 || u > 1.0) {
    throw PreconditionError("u must be in [0, 1]");
  }
  UserProfile next = profile;
  double gap = std::max(0.0, t_cur - profile.skill);
  double grown = profile.skill + profile.learn_rate * u * gap;
  // learn_rate*u <= 1, so the result lies between skill and t_cur; the min
  // guards the one-ulp overshoot when learn_rate*u == 1.
  next.skill = std::min(grown, std::max(profile.skill, t_cur));
  return next;
}

}  // namespace gamedyn
