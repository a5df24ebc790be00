#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "foresight/ground.hpp"

namespace foresight {

// Task-level knowledge: the master list of household tasks, object
// categories for resolving goal templates, per-task goal templates, and
// historical routine sequences for the frequency predictor.
struct TaskCatalog {
  std::vector<std::string> tasks;  // master list
  std::map<std::string, std::vector<std::string>> categories;
  std::map<std::string, std::vector<std::string>> goals;  // task -> templates
  std::vector<std::vector<std::string>> sequences;        // observed routines
};

// Loads master_tasks.json, virtualhome_categories.json, rddl_goals.json and
// sequence.json from `dir`.  Throws AssetLoadError on any problem.
TaskCatalog load_task_catalog(const std::string& dir);

// Resolves one task's goal templates against a model.  Placeholders like
// "{food}" take the lexicographically first category member that names an
// object of the model.  Returns ground fluent ids, or an empty vector when
// the task does not instantiate (unknown task, unresolvable placeholder, or
// a template naming no fluent of the model).
std::vector<std::int32_t> instantiate_task_goal(const GroundModel& m,
                                                const TaskCatalog& catalog,
                                                const std::string& task);

// Keeps the tasks that instantiate on this model and are not already
// satisfied in `bits`.  Stateless, hence idempotent.
std::vector<std::string> filter_valid(const GroundModel& m,
                                      const TaskCatalog& catalog,
                                      const std::vector<std::string>& tasks,
                                      const BitVec& bits);

// Merges predicted tasks' goals into the current goal.  Placement conflicts
// (one item asked to be in two places) resolve in favor of the current goal,
// then of earlier predictions.
std::vector<std::int32_t> compose_joint_goal(
    const GroundModel& m, const TaskCatalog& catalog,
    const std::vector<std::int32_t>& current_goal,
    const std::vector<std::string>& predicted_tasks);

// Copy of the model with a different goal conjunction (the cheap way to
// plan against an extended objective).
GroundModelPtr clone_with_goal(const GroundModel& m,
                               std::vector<std::int32_t> goal_fluents);

// ---------------------------------------------------------------------------
// Predictors
// ---------------------------------------------------------------------------

class TaskPredictor {
 public:
  virtual ~TaskPredictor() = default;
  // Up to `k` candidate next tasks, most plausible first.
  virtual std::vector<std::string> predict(
      const std::vector<std::string>& history, int k) = 0;

  // A flat robot action sequence for the model's goal, emitted once and
  // executed open-loop by the scripted baseline.  Returns action names;
  // callers ground them against the model and drop anything unknown.  The
  // default renders a template chore script from the initial state.
  virtual std::vector<std::string> plan_actions(const GroundModel& m);
};

// First-order successor statistics over the catalog's routine sequences:
// rank by how often each task followed the most recent one (ties
// lexicographic), topped up from the global frequency ranking.  With no
// history, the global ranking alone.
class MockFrequencyPredictor : public TaskPredictor {
 public:
  explicit MockFrequencyPredictor(const TaskCatalog& catalog);
  std::vector<std::string> predict(const std::vector<std::string>& history,
                                   int k) override;

 private:
  std::map<std::string, std::map<std::string, int>> successor_counts_;
  std::map<std::string, int> global_counts_;
};

// Talks to a hosted language model over HTTP.  The endpoint comes from
// FORESIGHT_LLM_URL (required) and FORESIGHT_LLM_KEY (optional bearer
// token); the POST body is {"prompt", "temperature", "max_tokens"} and the
// reply may carry either {"tasks": [...]} or {"text": "..."} to be matched
// against the catalog.  Every failure mode throws PredictorError.
class RemoteLLMPredictor : public TaskPredictor {
 public:
  RemoteLLMPredictor(const TaskCatalog& catalog, const GroundModel* scene);
  std::vector<std::string> predict(const std::vector<std::string>& history,
                                   int k) override;
  std::vector<std::string> plan_actions(const GroundModel& m) override;

  // Exposed for tests: the exact prompt for a history.
  std::string build_prompt(const std::vector<std::string>& history, int k) const;

 private:
  const TaskCatalog& catalog_;
  const GroundModel* scene_;  // optional, enriches the prompt
};

// The standard choice: remote model when FORESIGHT_LLM_URL is set, else the
// frequency mock.
std::unique_ptr<TaskPredictor> make_default_predictor(
    const TaskCatalog& catalog, const GroundModel* scene);

}  // namespace foresight
