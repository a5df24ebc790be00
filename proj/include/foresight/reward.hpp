#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "foresight/ground.hpp"
#include "foresight/mdp.hpp"
#include "foresight/subgoal.hpp"

namespace foresight {

// Reward = base(s, a, s') + multiplier * anticipatory(s, a, s').
//
// The base part carries the task itself: the domain's declared reward
// expression, action costs, goal and milestone payments, and the standing
// mess penalty. The anticipatory part pays for proactive behavior around
// the human (pre-securing fragile items, staging cleanup supplies) and
// charges for leaving the human exposed; scaling it by `multiplier` trades
// reactive against anticipatory behavior without touching the task reward.
//
// Milestone payments are potential differences (+v when a fact turns true,
// -v when it turns false again), so cycling a fact on and off nets zero and
// no trajectory can farm a payment twice.
struct RewardSpec {
  double goal_reward = 100.0;
  double delivery_reward = 10.0;
  double subgoal_reward = 10.0;
  double staging_reward = 5.0;
  double container_reward = 5.0;
  double collection_reward = 2.0;
  double appliance_reward = 2.0;
  double preempt_bonus = 8.0;
  double standby_bonus = 8.0;
  double exposure_penalty = -8.0;
  double action_cost = -1.0;
  double noop_cost = -0.25;
  double mess_penalty = -2.0;
  double mop_carry_bonus = 4.0;
  double multiplier = 1.0;

  struct Edge {
    std::int32_t fluent = -1;
    double value = 0.0;
    // When >= 0, the rising edge pays only on the tick where this robot
    // action runs (credit for doing the step yourself, not for watching the
    // person do it); the falling edge always charges, so toggling nets less
    // than zero and the payment cannot be farmed.
    std::int32_t gate_action = -1;
  };

  // Base-part rising edges (delivery / staging / container / subgoal payouts).
  std::vector<Edge> progress_edges;
  // Collection: robot newly holds an item the goal cares about.
  std::vector<std::int32_t> collection_fluents;
  // Appliance prep: switched_on / is_open turning true.
  std::vector<Edge> appliance_edges;
  // Fluents whose truth in s' is charged mess_penalty each.
  std::vector<std::int32_t> mess_fluents;
  // Cleanup gradient, shaped as a potential so no leg of the trip can be
  // farmed: carrying a mop is worth mop_carry_bonus exactly while a mess is
  // standing (makes the fetch leg visible to a short lookahead), and a
  // mess-free house is worth twice that (so finishing the wipe gains value
  // instead of forfeiting the carry term).
  std::vector<std::int32_t> mop_hold_fluents;
  // Anticipatory rising edges: a delicate item settling at one of its own
  // milestones (its goal spot, or the appliance on the way there) -> preempt,
  // gated to the robot's placing action so only doing the step yourself pays;
  // staged(loc) -> standby.  Paying for possession instead would reward
  // grabbing the item once and dumping it anywhere - or worse, holding it
  // hostage forever.
  std::vector<Edge> anticipation_edges;
  // One entry per risky human handling action (pick / place / put-in of a
  // breakable or spillable task item).  The charge lands when the person
  // goes for an item that is still loose: no settled fluent true beforehand
  // and the robot not already carrying it afterwards.  The robot escapes the
  // charge only by settling the item first or taking it out of circulation.
  struct Exposure {
    std::int32_t human_action = -1;
    std::vector<std::int32_t> settled_fluents;  // any true in s waives
    std::int32_t robot_hold_fluent = -1;        // true in s' also waives
  };
  std::vector<Exposure> exposures;

  // Items mentioned by goal or landmark literals (argument 0 of each).
  std::vector<std::int32_t> relevant_items;
  bool household = false;
};

// Builds the spec for a model, honoring scalar overrides from the instance:
// w_goal, w_subgoal, w_delivery, w_staging, w_container, w_collection,
// w_appliance, w_preempt, w_standby, w_exposure, action_cost, noop_cost,
// mess_penalty, w_mop_carry, anticipation_multiplier. Pass a finite
// `multiplier` to override the scalar (NaN keeps the configured value).
RewardSpec build_reward_spec(const GroundModel& m, const SubgoalSet& subgoals,
                             double multiplier);

struct RewardParts {
  double base = 0.0;
  double anticipatory = 0.0;
};

// Evaluates both parts for the transition s --joint--> s_next.
RewardParts evaluate_reward_parts(const GroundModel& m, const RewardSpec& spec,
                                  const State& s, const JointAction& joint,
                                  const State& s_next);

inline double evaluate_reward(const GroundModel& m, const RewardSpec& spec,
                              const State& s, const JointAction& joint,
                              const State& s_next) {
  const RewardParts p = evaluate_reward_parts(m, spec, s, joint, s_next);
  return p.base + spec.multiplier * p.anticipatory;
}

}  // namespace foresight
