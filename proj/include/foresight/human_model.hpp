#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foresight/ground.hpp"
#include "foresight/mdp.hpp"
#include "foresight/rng.hpp"

namespace foresight {

// Standard normal CDF and its inverse (the inverse throws RuntimeIssue
// outside (0, 1)).  Used by the motor-noise gate and its calibration.
double normal_cdf(double x);
double normal_inv_cdf(double p);

struct NoiseConfig {
  double mu = 0.0;
  double sigma = 0.1;
  // Acceptance window half-width, in units of the *base* sigma.  The window
  // stays fixed while the noise spread grows with task complexity, so harder
  // tasks push more probability mass outside it.
  double threshold_sigmas = 0.5;
};

// Simulates one attempt: draws motor noise n ~ N(mu, sigma*complexity_scale);
// landing outside the acceptance window wrecks the attempt outright,
// otherwise the nominal skill level decides.  Consumes exactly one normal
// draw, then one uniform draw only when the gate passes.
bool perturb_outcome(double nominal_success, const NoiseConfig& cfg,
                     double complexity_scale, Rng& rng);

// Closed form of perturb_outcome's success probability.
double effective_success_prob(double nominal_success, const NoiseConfig& cfg,
                              double complexity_scale);

// How demanding an action is: fine manipulation of delicate objects runs at
// 1.5, everything else at 1.0.
double task_complexity_scale(const GroundModel& m, std::int32_t human_action);

// Context key for skill statistics: the action schema plus the delicacy of
// the handled object ("human_pick|fragile", "human_put_in|plain"); actions
// that handle no object key on the bare schema name ("human_move").
std::string human_context(const GroundModel& m, std::int32_t human_action);

// One observed step of a human working alone (the robot idles).
struct TrialStep {
  BitVec state;
  std::int32_t human_action = -1;
  BitVec next;
};

// Beta-Bernoulli success-rate table over context keys with a +1/+2 prior,
// so an unseen context predicts 0.5 and estimates stay in (0, 1).
class LearnedHumanModel : public HumanOutcomeModel {
 public:
  double success_prob(const GroundModel& m, const BitVec& bits,
                      std::int32_t action) const override;

  double predict(const std::string& context) const;
  void update(const std::string& context, bool success);
  void update_online(const GroundModel& m, std::int32_t human_action,
                     bool success);

  // Re-derives outcomes from observed transitions and folds them in.
  // Blocked attempts are uninformative and skipped.  Throws
  // EmptyTrajectorySet when `steps` is empty.
  void fit_from_trials(const GroundModel& m, const std::vector<TrialStep>& steps);

  // Judges one observed step: Blocked (precondition failed mid-state),
  // Success (effects landed), or Failure (anything else).
  HumanOutcome infer_outcome(const GroundModel& m, const BitVec& state,
                             std::int32_t human_action, const BitVec& next) const;

  std::string to_json_string() const;
  static LearnedHumanModel from_json_string(const std::string& text);

  const std::map<std::string, std::pair<int, int>>& table() const {
    return table_;
  }

 private:
  std::map<std::string, std::pair<int, int>> table_;  // context -> (succ, fail)
};

// Fixed-rate stand-in for planners that model the human generically.
class UniformHumanModel : public HumanOutcomeModel {
 public:
  explicit UniformHumanModel(double p = 0.5) : p_(p) {}
  double success_prob(const GroundModel&, const BitVec&,
                      std::int32_t) const override {
    return p_;
  }

 private:
  double p_;
};

}  // namespace foresight
