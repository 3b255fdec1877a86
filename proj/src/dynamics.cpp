#include "gamedyn/dynamics.hpp"

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

void check_params(const EngagementParams& p) {
  require_finite(p.alpha, "alpha");
  require_finite(p.beta, "beta");
  require_finite(p.step_size, "step_size");
  if (p.alpha < 0.0 || p.beta < 0.0) {
    throw PreconditionError("alpha and beta must be >= 0");
  }
  if (p.step_size <= 0.0) {
    throw PreconditionError("step_size must be > 0");
  }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

EngagementState engagement_step(const EngagementState& state, double r, double d,
                                const EngagementParams& params) {
  require_finite(state.e, "e");
  require_finite(r, "r");
  require_finite(d, "d");
  check_params(params);
  if (state.e < 0.0 || state.e > 1.0) {
    throw PreconditionError("engagement must be in [0, 1]");
  }
  if (r < 0.0 || r > 1.0) {
    throw PreconditionError("reward signal must be in [0, 1]");
  }
  if (d < 0.0) {
    throw PreconditionError("disengagement signal must be >= 0");
  }
  EngagementState next;
  next.e = clamp01(state.e + params.step_size * (params.alpha * r - params.beta * d));
  next.t = state.t + 1;
  return next;
}

double closed_form_engagement(double e0, double r, double d,
                              const EngagementParams& params, int n) {
  require_finite(e0, "e0");
  require_finite(r, "r");
  require_finite(d, "d");
  check_params(params);
  if (n < 0) {
    throw PreconditionError("n must be >= 0");
  }
  double drive = params.alpha * r - params.beta * d;
  return clamp01(e0 + static_cast<double>(n) * params.step_size * drive);
}

double adapt_difficulty(double t_cur, double u, const AdaptationParams& params) {
  require_finite(t_cur, "t_cur");
  require_finite(u, "u");
  require_finite(params.gamma, "gamma");
  require_finite(params.t_min, "t_min");
  require_finite(params.t_max, "t_max");
  require_finite(params.s_target, "s_target");
  if (params.gamma < 0.0 || params.t_min >= params.t_max ||
      params.s_target <= 0.0 || params.s_target >= 1.0) {
    throw PreconditionError("invalid adaptation params");
  }
  if (t_cur < params.t_min || t_cur > params.t_max) {
    throw PreconditionError("t_cur out of [t_min, t_max]");
  }
  if (u < 0.0 || u > 1.0) {
    throw PreconditionError("u must be in [0, 1]");
  }
  return std::clamp(t_cur + params.gamma * (u - params.s_target), params.t_min, params.t_max);
}

double action_reward(double g, double c, const RewardWeights& w) {
  require_finite(g, "g");
  require_finite(c, "c");
  require_finite(w.w1, "w1");
  require_finite(w.w2, "w2");
  if (w.w1 <= 0.0 || w.w2 <= 0.0) {
    throw PreconditionError("reward weights must be > 0");
  }
  return w.w1 * g - w.w2 * c;
}

}  // namespace gamedyn
