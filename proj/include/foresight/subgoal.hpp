#pragma once

#include <string>
#include <vector>

#include "foresight/ground.hpp"
#include "foresight/mdp.hpp"

namespace foresight {

enum class SubgoalKind {
  Landmark,     // literal that every path to some goal literal must achieve
  GoalLiteral,  // one conjunct of the goal
  Final,        // the full goal conjunction
};

struct Subgoal {
  std::string name;                    // human-readable, e.g. the literal
  std::vector<std::int32_t> literals;  // fluent ids, all must hold
  SubgoalKind kind = SubgoalKind::Landmark;

  bool satisfied(const BitVec& bits) const {
    for (auto f : literals)
      if (!bits.get(static_cast<std::size_t>(f))) return false;
    return true;
  }
};

struct SubgoalSet {
  // Topologically ordered: prerequisites before dependents, lexicographic
  // tie-break, goal literals before the final conjunction.
  std::vector<Subgoal> ordered;
  // Landmarks that failed rollout validation and were dropped, plus other
  // analysis remarks; informational only.
  std::vector<std::string> notes;
};

// Derives intermediate subgoals from the goal: walks ground dynamics
// backwards collecting literals that every achiever of a goal literal
// requires (landmark intersection), validates each candidate by simulating a
// rollout that reaches it, and orders the result.  Throws UnreachableGoal if
// some goal literal is false initially and nothing can ever set it.
SubgoalSet derive_subgoals(const GroundModel& m);

// Fraction of subgoals currently satisfied, in [0, 1].
double subgoal_progress(const GroundModel& m, const SubgoalSet& sg,
                        const BitVec& bits);

// Straight-line errand planner for the household vocabulary: produces a
// robot action sequence that achieves the literals one by one from `bits`
// under most-likely dynamics (move, fetch, open, place/insert, switch).
// Returns an empty vector when it cannot route a literal.  Shared by subgoal
// validation and by the open-loop baseline.
std::vector<std::int32_t> synthesize_chore_plan(
    const GroundModel& m, const BitVec& bits,
    const std::vector<std::int32_t>& literals);

}  // namespace foresight
