#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "foresight/ast.hpp"
#include "foresight/bitvec.hpp"
#include "foresight/diagnostics.hpp"
#include "foresight/gexpr.hpp"

namespace foresight {

struct FluentInfo {
  std::string name;             // rendered, e.g. "obj_at(bread, kitchen)"
  std::int32_t schema = -1;     // index into GroundModel::state_schemas
  std::vector<std::int32_t> args;  // object ids
};

struct ActionInfo {
  std::string name;
  std::int32_t schema = -1;  // index into GroundModel::action_schemas
  std::vector<std::int32_t> args;
  bool human = false;
  bool noop = false;
};

struct SchemaInfo {
  std::string name;
  std::vector<std::int32_t> param_types;  // indices into type_names
};

// Well-known schema/object roles detected by name when the household domain
// vocabulary is present.  Everything is optional: a model without these just
// runs as a plain factored MDP (no collaboration features, no safety terms).
struct DomainProfile {
  // state schemas
  std::int32_t obj_at = -1, robot_at = -1, human_at = -1;
  std::int32_t robot_holding = -1, human_holding = -1;
  std::int32_t in_appliance = -1, switched_on = -1, is_open = -1;
  std::int32_t cooked = -1, clean = -1, broken = -1, mess = -1;
  // bookkeeping fluents for one-shot anticipatory bonuses
  std::int32_t secured = -1, staged = -1;
  // action schemas
  std::int32_t robot_move = -1, robot_pick = -1, robot_place = -1;
  std::int32_t robot_put_in = -1, robot_switch_on = -1, robot_open = -1;
  std::int32_t robot_mop = -1;
  std::int32_t human_move = -1, human_pick = -1, human_place = -1;
  std::int32_t human_put_in = -1, human_switch_on = -1, human_open = -1;
  // object properties (object ids)
  std::set<std::int32_t> fragile, spillable, appliance, is_mop, container;
  std::set<std::int32_t> food, cutlery, cleaning;
  // item -> appliance relations
  std::set<std::pair<std::int32_t, std::int32_t>> cooks_in, cleans_in;
  // type ids
  std::int32_t item_type = -1, location_type = -1;

  bool has_household_roles() const {
    return obj_at >= 0 && robot_at >= 0 && robot_pick >= 0;
  }
};

struct GroundOptions {
  // Upper bound on the number of ground state fluents; exceeding it throws
  // CombinatorialLimitExceeded before any state space is materialized.
  std::size_t max_ground_fluents = 100000;
};

// Immutable ground model shared by every consumer (engine, planner, harness).
struct GroundModel {
  std::string domain_name;
  std::string instance_name;

  // objects
  std::vector<std::string> type_names;
  std::vector<std::string> object_names;                  // global id space
  std::vector<std::int32_t> object_type;                  // object id -> type id
  std::vector<std::vector<std::int32_t>> objects_by_type; // type id -> sorted ids

  // fluents, ordered lexicographically by rendered name
  std::vector<SchemaInfo> state_schemas;
  std::vector<FluentInfo> fluents;
  std::map<std::string, std::int32_t> fluent_by_name;
  // schema id -> (args -> fluent id)
  std::vector<std::map<std::vector<std::int32_t>, std::int32_t>> fluent_lookup;

  // actions: robot partition first (lexicographic), then human partition
  // (lexicographic).  Statically inapplicable actions are already pruned.
  std::vector<SchemaInfo> action_schemas;
  std::vector<ActionInfo> actions;
  std::map<std::string, std::int32_t> action_by_name;
  std::vector<std::int32_t> robot_actions;
  std::vector<std::int32_t> human_actions;
  std::int32_t robot_noop = -1;
  std::int32_t human_noop = -1;

  // dynamics
  GArena arena;
  std::vector<std::int32_t> cpf_root;        // per fluent
  std::vector<std::int32_t> precond_root;    // per action
  std::vector<std::vector<std::int32_t>> action_affects;  // action -> fluents
  std::vector<std::int32_t> autonomous;      // fluents with action-free dynamics
  std::vector<bool> cpf_stochastic;          // per fluent
  std::int32_t reward_root = -1;             // domain-file reward expression

  // instance data
  BitVec init_bits;
  std::vector<std::int32_t> goal_fluents;    // conjunction, sorted
  int horizon = 1;
  std::map<std::string, double> scalars;     // merged constants + overrides

  DomainProfile profile;

  // --- convenience ------------------------------------------------------

  std::size_t fluent_count() const { return fluents.size(); }
  std::size_t action_count() const { return actions.size(); }

  const std::string& fluent_name(std::int32_t f) const { return fluents[f].name; }
  const std::string& action_name(std::int32_t a) const { return actions[a].name; }

  std::int32_t find_fluent(const std::string& name) const {
    auto it = fluent_by_name.find(name);
    return it == fluent_by_name.end() ? -1 : it->second;
  }
  std::int32_t find_action(const std::string& name) const {
    auto it = action_by_name.find(name);
    return it == action_by_name.end() ? -1 : it->second;
  }
  std::int32_t find_object(const std::string& name) const {
    for (std::size_t i = 0; i < object_names.size(); ++i)
      if (object_names[i] == name) return static_cast<std::int32_t>(i);
    return -1;
  }
  std::int32_t fluent_id(std::int32_t schema,
                         const std::vector<std::int32_t>& args) const {
    const auto& m = fluent_lookup[schema];
    auto it = m.find(args);
    return it == m.end() ? -1 : it->second;
  }
  double scalar_or(const std::string& name, double fallback) const {
    auto it = scalars.find(name);
    return it == scalars.end() ? fallback : it->second;
  }
  bool has_humans() const { return !human_actions.empty(); }
};

using GroundModelPtr = std::shared_ptr<const GroundModel>;

// Instantiates every schema over the type-consistent object tuples, folds
// non-fluents and named constants into the expressions, prunes actions whose
// preconditions are statically false, and runs the instance/domain
// cross-checks that parsing could not do.
//
// Input inconsistencies come back as diagnostics (total function); the
// ground-fluent budget is the one operational limit that throws
// (CombinatorialLimitExceeded), before any large allocation happens.
Result<GroundModelPtr> ground(const lang::DomainSpec& domain,
                              const lang::InstanceSpec& instance,
                              const GroundOptions& opts = {});

}  // namespace foresight
