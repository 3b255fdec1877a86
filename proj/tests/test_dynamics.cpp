#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "gamedyn/dynamics.hpp"
#include "gamedyn/errors.hpp"

using namespace gamedyn;

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

EngagementParams params(double alpha, double beta, double h = 1.0) {
  return {alpha, beta, h};
}

}  // namespace

TEST_CASE("engagement_step: zero drive is the identity") {
  EngagementState s{0.5, 0};
  auto next = engagement_step(s, 0.0, 0.0, params(0.7, 0.3));
  CHECK(next.e == 0.5);
  CHECK(next.t == 1);
}

TEST_CASE("engagement_step: saturates at the upper bound") {
  EngagementState s{0.9, 4};
  auto next = engagement_step(s, 1.0, 0.0, params(1.0, 0.0));
  CHECK(next.e == 1.0);
  CHECK(next.t == 5);
}

TEST_CASE("engagement_step: three constant steps match the closed form") {
  // e0=0.4, alpha=0.2, r=0.5, beta=0.1, d=0.3 -> drive 0.07 per step.
  EngagementParams p = params(0.2, 0.1);
  EngagementState s{0.4, 0};
  for (int i = 0; i < 3; ++i) {
    s = engagement_step(s, 0.5, 0.3, p);
  }
  CHECK(s.e == doctest::Approx(0.61).epsilon(1e-12));
  CHECK(s.e == doctest::Approx(closed_form_engagement(0.4, 0.5, 0.3, p, 3)).epsilon(1e-12));
  CHECK(s.t == 3);
}

TEST_CASE("engagement_step: non-finite inputs are rejected") {
  EngagementState s{0.5, 0};
  CHECK_THROWS_AS(engagement_step(s, kNan, 0.0, params(0.1, 0.1)), InvalidInputError);
  CHECK_THROWS_AS(engagement_step(s, 0.0, kInf, params(0.1, 0.1)), InvalidInputError);
  CHECK_THROWS_AS(engagement_step({kNan, 0}, 0.0, 0.0, params(0.1, 0.1)), InvalidInputError);
  CHECK_THROWS_AS(engagement_step(s, 0.0, 0.0, params(kNan, 0.1)), InvalidInputError);
}

TEST_CASE("engagement_step: contract violations are precondition errors") {
  EngagementState s{0.5, 0};
  CHECK_THROWS_AS(engagement_step(s, -0.1, 0.0, params(0.1, 0.1)), PreconditionError);
  CHECK_THROWS_AS(engagement_step(s, 0.0, -1.0, params(0.1, 0.1)), PreconditionError);
  CHECK_THROWS_AS(engagement_step(s, 0.0, 0.0, params(0.1, 0.1, 0.0)), PreconditionError);
  CHECK_THROWS_AS(engagement_step({1.5, 0}, 0.0, 0.0, params(0.1, 0.1)), PreconditionError);
}

TEST_CASE("closed_form_engagement: hand-evaluated values") {
  CHECK(closed_form_engagement(0.4, 0.5, 0.3, params(0.2, 0.1), 3) ==
        doctest::Approx(0.61).epsilon(1e-12));
  CHECK(closed_form_engagement(0.37, 0.9, 0.2, params(0.5, 0.25), 0) == 0.37);
  CHECK(closed_form_engagement(1.0, 1.0, 0.0, params(0.3, 0.1), 10) == 1.0);
  CHECK_THROWS_AS(closed_form_engagement(kNan, 0.0, 0.0, params(0.1, 0.1), 1),
                  InvalidInputError);
}

TEST_CASE("adapt_difficulty: target performance is the fixed point") {
  AdaptationParams p;
  CHECK(adapt_difficulty(5.0, p.s_target, p) == 5.0);
}

TEST_CASE("adapt_difficulty: direct substitution") {
  AdaptationParams p;
  p.gamma = 0.5;
  p.s_target = 0.7;
  CHECK(adapt_difficulty(5.0, 0.9, p) == doctest::Approx(5.1).epsilon(1e-12));
}

TEST_CASE("adapt_difficulty: clamps at the upper bound") {
  AdaptationParams p;
  CHECK(adapt_difficulty(p.t_max, 1.0, p) == p.t_max);
}

TEST_CASE("adapt_difficulty: error routing") {
  AdaptationParams p;
  CHECK_THROWS_AS(adapt_difficulty(kNan, 0.5, p), InvalidInputError);
  CHECK_THROWS_AS(adapt_difficulty(11.0, 0.5, p), PreconditionError);
  CHECK_THROWS_AS(adapt_difficulty(-1.0, 0.5, p), PreconditionError);
}

TEST_CASE("action_reward: examples") {
  CHECK(action_reward(0.0, 0.0, {1.0, 0.5}) == 0.0);
  CHECK(action_reward(2.0, 1.0, {1.0, 0.5}) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(action_reward(3.0, 3.0, {1.0, 1.0}) == 0.0);
  CHECK_THROWS_AS(action_reward(kInf, 0.0, {1.0, 1.0}), InvalidInputError);
  CHECK_THROWS_AS(action_reward(1.0, 0.0, {0.0, 1.0}), PreconditionError);
}

// ---- properties -----------------------------------------------------------

TEST_CASE("property: engagement_step output always stays in [0, 1]") {
  std::mt19937 gen(12345);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> wide(0.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    EngagementState s{unit(gen), 0};
    auto next = engagement_step(s, unit(gen), wide(gen), params(wide(gen), wide(gen), 0.1 + wide(gen)));
    CHECK(next.e >= 0.0);
    CHECK(next.e <= 1.0);
  }
}

TEST_CASE("property: single-step alpha monotonicity") {
  std::mt19937 gen(777);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> coeff(0.0, 2.0);
  for (int i = 0; i < 2000; ++i) {
    EngagementState s{unit(gen), 0};
    double r = unit(gen);
    double d = coeff(gen);
    double beta = coeff(gen);
    double a1 = coeff(gen);
    double a2 = coeff(gen);
    if (a1 < a2) std::swap(a1, a2);
    double e1 = engagement_step(s, r, d, params(a1, beta)).e;
    double e2 = engagement_step(s, r, d, params(a2, beta)).e;
    CHECK(e1 >= e2);
  }
}

TEST_CASE("property: single-step beta monotonicity") {
  std::mt19937 gen(778);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> coeff(0.0, 2.0);
  for (int i = 0; i < 2000; ++i) {
    EngagementState s{unit(gen), 0};
    double r = unit(gen);
    double d = coeff(gen);
    double alpha = coeff(gen);
    double b1 = coeff(gen);
    double b2 = coeff(gen);
    if (b1 < b2) std::swap(b1, b2);
    double e1 = engagement_step(s, r, d, params(alpha, b1)).e;
    double e2 = engagement_step(s, r, d, params(alpha, b2)).e;
    CHECK(e1 <= e2);
  }
}

TEST_CASE("property: adapt_difficulty moves with the performance gap") {
  std::mt19937 gen(779);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  AdaptationParams p;  // bounds [0, 10]; updates from mid-range never clamp
  for (int i = 0; i < 2000; ++i) {
    double t_cur = 3.0 + 4.0 * unit(gen);
    double u = unit(gen);
    p.gamma = 2.0 * unit(gen);
    double t_next = adapt_difficulty(t_cur, u, p);
    if (u > p.s_target) {
      CHECK(t_next >= t_cur);
    } else if (u < p.s_target) {
      CHECK(t_next <= t_cur);
    } else {
      CHECK(t_next == t_cur);
    }
    if (p.gamma > 0.0 && u != p.s_target) {
      CHECK(((t_next > t_cur) == (u > p.s_target)));
    }
  }
}

TEST_CASE("property: larger gamma moves difficulty at least as far (pre-clamp)") {
  std::mt19937 gen(780);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    AdaptationParams p1;
    AdaptationParams p2;
    double g1 = 2.0 * unit(gen);
    double g2 = 2.0 * unit(gen);
    if (g1 < g2) std::swap(g1, g2);
    p1.gamma = g1;
    p2.gamma = g2;
    // keep updates well inside [0, 10] so no clamp binds
    double t_cur = 3.0 + 4.0 * unit(gen);
    double u = unit(gen);
    CHECK(std::fabs(adapt_difficulty(t_cur, u, p1) - t_cur) >=
          std::fabs(adapt_difficulty(t_cur, u, p2) - t_cur));
  }
}

TEST_CASE("property: iterated steps match the closed form within 1e-12") {
  std::mt19937 gen(781);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> small(0.0, 0.05);
  int accepted = 0;
  for (int i = 0; i < 500; ++i) {
    double e0 = unit(gen);
    double r = unit(gen);
    double d = unit(gen);
    EngagementParams p = params(small(gen), small(gen), 0.25 + unit(gen));
    int n = 100;
    // constant drive: the path is monotone, so in-range endpoints mean an
    // unclamped path
    double drive = p.step_size * (p.alpha * r - p.beta * d);
    double end = e0 + n * drive;
    if (end < 0.001 || end > 0.999) continue;
    ++accepted;
    EngagementState s{e0, 0};
    for (int k = 0; k < n; ++k) {
      s = engagement_step(s, r, d, p);
    }
    CHECK(std::fabs(s.e - closed_form_engagement(e0, r, d, p, n)) <= 1e-12);
  }
  CHECK(accepted > 100);
}

TEST_CASE("property: action_reward is linear") {
  std::mt19937 gen(782);
  std::uniform_real_distribution<double> val(-5.0, 5.0);
  std::uniform_real_distribution<double> weight(0.1, 3.0);
  for (int i = 0; i < 2000; ++i) {
    RewardWeights w{weight(gen), weight(gen)};
    double g1 = val(gen);
    double g2 = val(gen);
    double c1 = val(gen);
    double c2 = val(gen);
    CHECK(action_reward(g1 + g2, c1 + c2, w) ==
          doctest::Approx(action_reward(g1, c1, w) + action_reward(g2, c2, w))
              .epsilon(1e-12));
  }
}
