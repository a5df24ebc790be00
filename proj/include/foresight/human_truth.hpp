#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "foresight/ground.hpp"
#include "foresight/human_model.hpp"
#include "foresight/mdp.hpp"
#include "foresight/rng.hpp"

namespace foresight {

// One step of a scripted household routine.  Fields other than `action` are
// optional; the executor fills in travel, fetching, and opening on its own,
// so scripts only state intent ("get the mug into the coffee maker").
struct ScriptStep {
  std::string action;   // human action schema name
  std::string item;     // manipulated object (appliance for switch_on/open)
  std::string target;   // destination location or appliance
  std::string to_item;  // for move steps: walk to this object's current spot
  std::string serves;   // ground fluent; already true => the step is moot
};

struct TaskScript {
  std::string name;
  std::vector<ScriptStep> steps;
};

// Behavioral ground truth: per-context effective success rates, the chance
// that a failure turns destructive, how often the person wanders off-script,
// and which items they accept as stand-ins when thwarted repeatedly.
struct GroundTruthConfig {
  NoiseConfig noise;
  std::map<std::string, double> targets;  // context -> effective success rate
  double default_target = 0.9;
  double mishap_prob = 0.5;     // P(destructive | failed) for capable actions
  double deviation_prob = 0.02; // per-step chance of wandering off for a bit
  std::map<std::string, std::vector<std::string>> substitutes;
  std::map<std::string, TaskScript> tasks;
};

GroundTruthConfig parse_ground_truth(const std::string& json_text);
GroundTruthConfig load_ground_truth(const std::string& path);

// Simulated person following task scripts with a reactive executor:
// prerequisites (walking over, fetching, opening) are improvised, steps
// whose purpose is already served are skipped, repeated blocking triggers
// substitution with a riskier stand-in item, and occasional deviations
// wander for a step or two before resuming.
//
// The object is stateful across one episode; `decide` and `observe` must be
// called once per tick, in order.
class ScriptedHuman : public HumanOutcomeModel {
 public:
  ScriptedHuman(GroundModelPtr model, GroundTruthConfig cfg);

  // Concatenates the named task scripts into this episode's agenda.
  // Throws AssetLoadError for unknown tasks or unresolvable step fields.
  void begin_episode(const std::vector<std::string>& task_names);

  struct Decision {
    std::int32_t action = -1;  // ground human action (possibly the idle)
    int prevented = 0;   // delicate steps skipped this tick (already served)
    bool deviation = false;
    bool substitution = false;  // attempt involves a stand-in item
    bool robot_busy = false;    // the robot is holding this step's item
    int script_index = -1;      // agenda position being served, -1 when idle
  };

  Decision decide(const BitVec& mid, Rng& rng);

  // Rolls the outcome of an attempt in the mid-step state.  Applicability is
  // checked first (Blocked draws nothing); the gate draw happens iff the
  // target rate is interior, and a mishap draw iff the attempt failed and
  // the action can do damage.
  HumanOutcome resolve(const BitVec& mid, std::int32_t action,
                       bool substitution, Rng& rng) const;

  // Feed back what actually happened so the agenda advances, blocked
  // streaks accumulate, and frustration can trigger substitution.
  void observe(const Decision& d, HumanOutcome outcome);

  bool script_done() const { return index_ >= agenda_.size(); }
  std::size_t agenda_size() const { return agenda_.size(); }
  std::size_t agenda_position() const { return index_; }

  // Delicate steps in the already-served prefix of the remaining agenda —
  // preventions the person never got a tick to acknowledge.
  int flush_prevented(const BitVec& bits) const;

  // Effective success rate for the context of `action` (what the engine's
  // Bernoulli resolution should use when bypassing `resolve`).
  double success_prob(const GroundModel& m, const BitVec& bits,
                      std::int32_t action) const override;
  double mishap_given_failure(const GroundModel& m, const BitVec& bits,
                              std::int32_t action) const override;

  double target_for(std::int32_t action) const;
  const GroundTruthConfig& config() const { return cfg_; }

 private:
  struct AgendaStep {
    ScriptStep spec;
    std::int32_t serves_fluent = -1;
  };

  std::string effective_item(const std::string& name) const;
  bool step_served(const BitVec& mid, const AgendaStep& s) const;
  bool step_delicate(const AgendaStep& s) const;
  std::int32_t resolve_attempt(const BitVec& mid, const AgendaStep& s,
                               bool& substitution) const;
  std::int32_t wander_move(const BitVec& mid, Rng& rng) const;
  void frustrate();

  GroundModelPtr model_;
  GroundTruthConfig cfg_;
  std::vector<AgendaStep> agenda_;
  std::size_t index_ = 0;
  int blocked_streak_ = 0;
  int wait_ticks_ = 0;  // patience spent watching the robot hold the item
  int attempts_on_step_ = 0;
  int wander_left_ = 0;
  std::map<std::string, std::string> remap_;  // frustration substitutions
  std::set<std::string> risky_items_;         // stand-ins attempted at +risk
};

// Runs one human-only episode (the robot idles every tick) and returns the
// observed transitions, one per non-idle human attempt.
std::vector<TrialStep> simulate_trial(const GroundModel& m, ScriptedHuman& gt,
                                      const std::vector<std::string>& tasks,
                                      int max_steps, Rng& rng);

}  // namespace foresight
