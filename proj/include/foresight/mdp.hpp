#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foresight/ground.hpp"
#include "foresight/rng.hpp"

namespace foresight {

struct State {
  BitVec bits;
  int step = 0;

  bool operator==(const State& o) const {
    return step == o.step && bits == o.bits;
  }
  bool operator<(const State& o) const {
    if (step != o.step) return step < o.step;
    return bits < o.bits;
  }
};

inline State initial_state(const GroundModel& m) {
  return State{m.init_bits, 0};
}

// One agent's half of a joint step.  -1 means the agent is absent (a model
// with no human actions is just a single-agent MDP).
struct JointAction {
  std::int32_t robot = -1;
  std::int32_t human = -1;
};

// Resolution of the human's attempt within a step.
//  - Absent/Blocked: no effects.
//  - Success: the action's declared effects apply.
//  - Failure: the attempt fizzles with no state change.
//  - Mishap: the attempt fails destructively (drop/spill consequences).
enum class HumanOutcome : std::uint8_t { Absent, Blocked, Success, Failure, Mishap };

const char* to_string(HumanOutcome o);

// Probability model for human action outcomes, supplied by the caller: the
// planner passes its learned model, baselines pass fixed priors.  The
// default implementation reads `success_<schema>` scalars from the model
// (1.0 when undeclared) so domain files can encode rates directly.
class HumanOutcomeModel {
 public:
  virtual ~HumanOutcomeModel() = default;
  virtual double success_prob(const GroundModel& m, const BitVec& bits,
                              std::int32_t action) const;
  // Probability that a failed attempt is destructive rather than a fizzle.
  // Pessimistic default: every failure of a drop-capable action is a mishap.
  virtual double mishap_given_failure(const GroundModel& m, const BitVec& bits,
                                      std::int32_t action) const;
};

// Deterministic choice of the human's next action given the mid-step state
// (after the robot has acted).  The planner folds this into its chance
// layer; the simulation harness substitutes the scripted ground truth.
class HumanPolicy {
 public:
  virtual ~HumanPolicy() = default;
  virtual std::int32_t choose(const GroundModel& m, const BitVec& bits,
                              int step) const = 0;
};

enum class Agent { Robot, Human };

bool action_applicable(const GroundModel& m, const BitVec& bits, std::int32_t a);

// All applicable actions for the agent, ascending by id (ids are assigned in
// lexicographic name order, so this is also lexicographic).  The no-op has a
// constant-true precondition, so the result is never empty.
std::vector<std::int32_t> applicable_actions(const GroundModel& m,
                                             const BitVec& bits, Agent agent);

bool goal_satisfied(const GroundModel& m, const BitVec& bits);

// --- step semantics -------------------------------------------------------
//
// A joint step is sequential within one tick: the robot's effects (plus all
// autonomous dynamics, which advance exactly once per tick) are applied
// first; the human then acts in the resulting mid-state.  Human effects
// apply only on Success; a Mishap instead applies the drop/spill pattern for
// the attempted action.  Sequencing avoids effect conflicts (e.g. both
// agents grabbing the same object) by construction.

// Robot phase: throws InapplicableAction if the precondition fails.
BitVec apply_robot_phase(const GroundModel& m, const BitVec& bits,
                         std::int32_t robot_action, Rng& rng);

// Checks the attempt against the mid-state and rolls success/failure/mishap.
HumanOutcome resolve_human_outcome(const GroundModel& m, const BitVec& mid,
                                   std::int32_t human_action,
                                   const HumanOutcomeModel& model, Rng& rng);

// Applies a resolved human attempt to the mid-state.
BitVec apply_human_phase(const GroundModel& m, const BitVec& mid,
                         std::int32_t human_action, HumanOutcome outcome,
                         Rng& rng);

struct StepResult {
  State next;
  std::int32_t human_action = -1;
  HumanOutcome outcome = HumanOutcome::Absent;
};

// Full joint step: robot phase, then the policy picks the human action in
// the mid-state (skipped when the model has no humans or policy is null),
// then outcome resolution and the human phase.
StepResult sample_next(const GroundModel& m, const State& s,
                       std::int32_t robot_action, const HumanPolicy* policy,
                       const HumanOutcomeModel& outcomes, Rng& rng);

// Exact successor distribution of the robot phase (no human), for oracles
// and exhaustive tests.  Throws RuntimeIssue if more than `max_random_bits`
// fluents are simultaneously stochastic for this transition.
std::vector<std::pair<BitVec, double>> enumerate_robot_phase(
    const GroundModel& m, const BitVec& bits, std::int32_t robot_action,
    int max_random_bits = 20);

// Structural invariants of the household vocabulary (each item in exactly
// one place, agents at exactly one location, held items not broken...).
// Returns human-readable violations; empty means consistent.  Models without
// the household roles vacuously pass.
std::vector<std::string> validate_state(const GroundModel& m, const BitVec& bits);

// True if the failed version of this human action drops/spills (used by the
// engine's mishap pattern and by outcome models).
bool mishap_capable(const GroundModel& m, std::int32_t human_action);

}  // namespace foresight
