#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foresight/anticipate.hpp"
#include "foresight/ground.hpp"
#include "foresight/human_model.hpp"
#include "foresight/human_truth.hpp"
#include "foresight/planner.hpp"

namespace foresight {

// Robot control modes compared by the experiment suite.
//  - Ours: anticipatory planner — predicted upcoming tasks fold into the
//    goal, the anticipation multiplier is active, and the planner uses the
//    learned skill model (refined online as outcomes are observed).
//  - RddlBaseline: the same planner restricted to the declared goal: no task
//    prediction, no anticipation term, a uniform 0.5 skill prior.
//  - LlmBaseline: predicted tasks but open-loop execution — a chore plan is
//    synthesized once and followed blindly; inapplicable steps are consumed
//    as idles and nothing replans.
enum class Mode { Ours, RddlBaseline, LlmBaseline };

const char* to_string(Mode mode);
Mode parse_mode(const std::string& name);  // throws RuntimeIssue

struct FailureEvent {
  int step = 0;
  std::string kind;     // drop_fragile | spill | deviation
  std::string subject;  // item or location involved
  std::string handled;  // recovered | unhandled
};

struct EpisodeConfig {
  Mode mode = Mode::Ours;
  double lambda = 1.0;  // anticipation multiplier for Ours
  PlannerConfig planner;
  int max_steps = -1;  // -1: the model horizon
  std::uint64_t seed = 0;
  // tasks[0] is underway (and is what the instance's goal encodes);
  // tasks[1], when present, is what the person will actually do next.
  std::vector<std::string> tasks;
  int predict_k = 4;
  const LearnedHumanModel* prior_model = nullptr;  // pre-learned skills
  TaskPredictor* predictor = nullptr;  // null: frequency mock from the catalog
  bool online_learning = true;
  bool write_trace = true;
};

struct EpisodeMetrics {
  std::string task;
  Mode mode = Mode::Ours;
  double lambda = 0.0;
  double subgoal_pct = 0.0;       // milestones ever reached / milestones
  double task_completion = 0.0;   // tasks fully done at the end / tasks
  int failures = 0;               // drop + spill + deviation events
  int prevented = 0;              // delicate steps taken off the person
  int recovered = 0;              // failure events cleaned up before the end
  int unhandled = 0;
  int deviations = 0;
  int steps = 0;
  int robot_actions = 0;          // non-idle robot actions
  bool goal_reached = false;      // all tasks' literals true at the end
  double total_reward = 0.0;
  double base_reward = 0.0;
  double anticipatory_reward = 0.0;
};

struct EpisodeResult {
  EpisodeMetrics metrics;
  std::vector<FailureEvent> events;
  std::string trace_jsonl;  // one JSON object per line; empty if not written
};

// Runs one collaboration episode: the scripted person works through
// tasks[0] then tasks[1] while the robot assists according to `cfg.mode`.
// Fully deterministic for a fixed (model, catalog, behavior config, cfg).
EpisodeResult run_episode(GroundModelPtr m, const TaskCatalog& catalog,
                          const GroundTruthConfig& gt_cfg,
                          const EpisodeConfig& cfg);

// Fits the skill model from `trials` scripted solo episodes of `task` on the
// learning model (derive_seed(seed, "learn", i) per trial).
LearnedHumanModel learn_prior(GroundModelPtr m, const GroundTruthConfig& gt_cfg,
                              const std::string& task, int trials,
                              std::uint64_t seed);

}  // namespace foresight
