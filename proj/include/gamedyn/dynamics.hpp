#pragma once

namespace gamedyn {

// Coefficients of the engagement update e' = clamp(e + h*(alpha*r - beta*d), 0, 1).
struct EngagementParams {
  double alpha = 0.2;      // reward coefficient, per step
  double beta = 0.1;       // disengagement coefficient, per step
  double step_size = 1.0;  // forward Euler step h, time units per step
};

struct EngagementState {
  double e = 0.5;  // engagement level, always in [0, 1]
  int t = 0;       // step index
};

// Difficulty update t' = clamp(t + gamma*(u - s_target), t_min, t_max).
struct AdaptationParams {
  double gamma = 0.5;     // adaptation rate
  double t_min = 0.0;     // difficulty lower bound
  double t_max = 10.0;    // difficulty upper bound
  double s_target = 0.7;  // desired success rate, in (0, 1)
};

// Agent reward r = w1*g - w2*c.
struct RewardWeights {
  double w1 = 1.0;  // long-term gain weight
  double w2 = 0.5;  // immediate cost weight
};

// One forward Euler step of the engagement equation. r is the normalized
// reward signal in [0, 1], d the disengagement signal >= 0. The result is
// clamped to [0, 1] and the step index advances by one.
EngagementState engagement_step(const EngagementState& state, double r, double d,
                                const EngagementParams& params);

// Engagement after n steps under constant r and d: clamp(e0 + n*h*(alpha*r - beta*d)).
// Matches n applications of engagement_step whenever the unclamped path stays
// in [0, 1]. Test oracle for constant-input traces.
double closed_form_engagement(double e0, double r, double d,
                              const EngagementParams& params, int n);

// One difficulty adaptation step for observed performance u in [0, 1].
double adapt_difficulty(double t_cur, double u, const AdaptationParams& params);

// Action reward w1*g - w2*c for long-term gain g and immediate cost c.
double action_reward(double g, double c, const RewardWeights& w);

}  // namespace gamedyn
