#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "foresight/ground.hpp"
#include "foresight/mdp.hpp"
#include "foresight/reward.hpp"
#include "foresight/rng.hpp"
#include "foresight/subgoal.hpp"

namespace foresight {

// How aggressively the search explores, as a multiplier on the UCB constant:
// Broad doubles it, Informative halves it (trusting the heuristic more),
// Mixed leaves it alone.
enum class ExplorationProfile { Broad, Informative, Mixed };

struct PlannerConfig {
  int trials = 2000;           // search trials per decision
  double exploration = 1.4142135623730951;  // base UCB constant
  ExplorationProfile profile = ExplorationProfile::Mixed;
  int ids_depth = 3;    // most-likely lookahead depth for leaf initialization
  int ids_budget = 4000;  // action evaluations allowed per leaf initialization
  int max_depth = -1;   // receding planning horizon (-1: to the model horizon)
  bool prune_actions = true;  // restrict branching to task-relevant actions
  std::uint64_t seed = 0;
};

struct PlanStats {
  double root_value = 0.0;
  int trials_run = 0;
  std::size_t decision_nodes = 0;
  bool root_solved = false;
};

// The robot's internal picture of what the person does next: a greedy
// one-step scorer over the human's applicable actions (progress on goal or
// milestone literals counts most, then collecting task items, then moving
// toward them).  Deterministic; ties break toward the smaller action id, and
// a best score of zero or less means the person idles.
class ExpectedHumanPolicy : public HumanPolicy {
 public:
  ExpectedHumanPolicy(GroundModelPtr m, const RewardSpec& reward,
                      const SubgoalSet& subgoals);
  std::int32_t choose(const GroundModel& m, const BitVec& mid,
                      int step) const override;

 private:
  GroundModelPtr model_;
  std::vector<std::int32_t> literals_;        // goal + milestone fluents
  std::set<std::int32_t> relevant_items_;
};

// Trial-based tree search over the joint-step MDP.  Decision nodes are keyed
// by (state, step) so transpositions merge; each action edge keeps the
// sampled successor distribution and backs up a frequency-weighted Bellman
// value.  Fresh leaves are initialized with a budgeted greedy lookahead
// under most-likely dynamics.  Search effort, exploration, and branching
// restrictions come from PlannerConfig.
class Planner {
 public:
  Planner(GroundModelPtr m, RewardSpec reward, SubgoalSet subgoals,
          PlannerConfig cfg);
  ~Planner();

  // The person's attempt model used during lookahead (non-owning; defaults
  // to a scalar-driven model).  The expected-action policy is built in.
  void set_outcome_model(const HumanOutcomeModel* model);

  // Chooses the robot action for `s`, rebuilding the tree.
  std::int32_t plan(const State& s, PlanStats* stats = nullptr);

  // Greedy walk through the tree built by the last plan() call: most-valued
  // action, then the most-frequently-sampled successor.  Stops at unexplored
  // or terminal states.
  std::vector<std::int32_t> extract_plan(int max_len) const;

  const PlannerConfig& config() const { return cfg_; }
  bool action_allowed(std::int32_t a) const;

 private:
  struct Node;
  struct Edge;
  struct MemoPolicy;

  Node* fetch(const State& s);
  bool terminal(const State& s) const;
  double heuristic(const State& s);
  double run_trial(const State& s, int depth);
  std::int32_t select_ucb(Node& node, Rng& rng) const;

  GroundModelPtr model_;
  RewardSpec reward_;
  SubgoalSet subgoals_;
  PlannerConfig cfg_;
  ExpectedHumanPolicy human_policy_;
  std::unique_ptr<MemoPolicy> memo_policy_;  // caches choose() by state bits
  const HumanOutcomeModel* outcomes_;  // non-owning
  HumanOutcomeModel default_outcomes_;
  std::set<std::int32_t> allowed_;  // empty = no pruning
  int horizon_cap_ = 0;
  std::map<State, std::unique_ptr<Node>> nodes_;
  State root_;
  Rng rng_;
  int heuristic_budget_left_ = 0;
};

}  // namespace foresight
