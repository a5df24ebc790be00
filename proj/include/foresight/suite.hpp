#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "foresight/harness.hpp"

namespace foresight {

// Experiment-suite configuration.  The planner settings here default to the
// suite's reduced budgets (the library-level PlannerConfig defaults are the
// thorough ones); a key=value config file and CLI flags override them.
struct SuiteConfig {
  std::string assets_dir = "assets";
  std::string out_dir = "out";
  std::uint64_t seed = 1;
  int rollouts = 30;
  int sweep_rollouts = 12;
  int learning_trials = 110;
  double lambda = 1.0;                          // anticipation weight for Ours
  std::vector<double> lambdas = {0.0, 0.5, 1.0, 2.0, 4.0};
  PlannerConfig planner;
  int max_steps = -1;
  int predict_k = 2;
  bool traces = true;

  SuiteConfig() {
    planner.trials = 400;
    planner.ids_depth = 2;
    planner.ids_budget = 1200;
    planner.max_depth = 8;
  }
};

// Applies `key=value` lines (# comments, blank lines ignored) to a config.
// Unknown keys throw RuntimeIssue, naming the key.
void apply_config_line(SuiteConfig& cfg, const std::string& line);
void load_config_file(SuiteConfig& cfg, const std::string& path);

// What the asset directory declares: the domain, the learning setup, and the
// evaluation pairs (task underway + actual next task, with an instance file).
struct SuiteSpec {
  std::string domain_file;
  std::string learning_instance;
  std::string learning_task;
  std::string behavior_file;
  struct Pair {
    std::string name;
    std::string instance;
    std::vector<std::string> tasks;
  };
  std::vector<Pair> pairs;
};

SuiteSpec load_suite_spec(const std::string& assets_dir);

// Parses and grounds a domain/instance file pair; throws AssetLoadError with
// the collected diagnostics when anything is wrong.
GroundModelPtr load_model(const std::string& domain_path,
                          const std::string& instance_path);

struct Aggregate {
  int episodes = 0;
  int completed = 0;  // episodes that reached the full joint goal
  double subgoal_pct = 0.0;
  double task_completion = 0.0;
  double failures = 0.0;
  double prevented = 0.0;
  double recovered = 0.0;
  double unhandled = 0.0;
  double avg_actions = 0.0;  // over completed episodes
};

struct SuiteOutcome {
  // pair name -> mode name -> aggregate
  std::map<std::string, std::map<std::string, Aggregate>> by_task_mode;
};

struct SweepOutcome {
  // pair name -> lambda -> mean failures per episode
  std::map<std::string, std::map<double, double>> mean_failures;
};

// Full three-mode comparison over every pair; writes completion.csv,
// failures.csv and (optionally) trace-<seed>.jsonl under out_dir.
SuiteOutcome run_suite(const SuiteConfig& cfg);

// Anticipation-weight sweep (Ours only); writes sweep.csv under out_dir.
SweepOutcome run_sweep(const SuiteConfig& cfg);

// Loads and cross-checks every asset; prints an inventory to `out`.
// Returns false when anything fails to load or validate.
bool check_assets(const SuiteConfig& cfg, std::ostream& out);

}  // namespace foresight
