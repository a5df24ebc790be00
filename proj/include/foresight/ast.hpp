#pragma once

#include <map>
#include <string>
#include <vector>

#include "foresight/diagnostics.hpp"

namespace foresight::lang {

// Expression AST for the modelling language.  One tagged struct instead of a
// class hierarchy: the dialect is small, expressions are values (copyable,
// comparable), and the grounder walks them by kind anyway.
enum class ExprKind {
  BoolConst,   // bval
  NumConst,    // num
  ScalarRef,   // name (declared numeric constant)
  FluentRef,   // name(args...); args are ?vars or object names
  Not,         // kids[0]
  And,         // kids...
  Or,          // kids...
  Ite,         // kids[0] ? kids[1] : kids[2]
  Bernoulli,   // kids[0] = numeric parameter
  Sum,         // quantified arithmetic sum over binders
  Exists,      // quantified disjunction
  Forall,      // quantified conjunction
  Add, Sub, Mul,  // kids[0] op kids[1]
  Neg,         // -kids[0]
};

struct TypedVar {
  std::string var;   // includes the leading '?'
  std::string type;
  bool operator==(const TypedVar&) const = default;
};

struct Expr {
  ExprKind kind = ExprKind::BoolConst;
  bool bval = false;
  double num = 0.0;
  std::string name;                // FluentRef / ScalarRef
  std::vector<std::string> args;   // FluentRef arguments
  std::vector<TypedVar> binders;   // Sum / Exists / Forall
  std::vector<Expr> kids;
  SourcePos pos;

  bool operator==(const Expr& o) const {
    // Positions are deliberately ignored: two parses of equivalent text
    // compare equal even when formatting moved tokens around.
    return kind == o.kind && bval == o.bval && num == o.num &&
           name == o.name && args == o.args && binders == o.binders &&
           kids == o.kids;
  }
};

inline Expr make_bool(bool v) {
  Expr e;
  e.kind = ExprKind::BoolConst;
  e.bval = v;
  return e;
}

inline Expr make_num(double v) {
  Expr e;
  e.kind = ExprKind::NumConst;
  e.num = v;
  return e;
}

enum class FluentKind { State, NonFluent, Action };

struct FluentSchema {
  std::string name;
  std::vector<std::string> param_types;
  FluentKind kind = FluentKind::State;
  SourcePos pos;

  bool operator==(const FluentSchema& o) const {
    return name == o.name && param_types == o.param_types && kind == o.kind;
  }
};

// Conditional probability function: next-step value of one state fluent.
//   fluent'(?x, ?y) = expr;
struct Cpf {
  std::string fluent;
  std::vector<std::string> params;  // formal ?vars, one per schema parameter
  Expr body;
  SourcePos pos;

  bool operator==(const Cpf& o) const {
    return fluent == o.fluent && params == o.params && body == o.body;
  }
};

// Applicability condition for one action schema.
struct Precondition {
  std::string action;
  std::vector<std::string> params;
  Expr body;
  SourcePos pos;

  bool operator==(const Precondition& o) const {
    return action == o.action && params == o.params && body == o.body;
  }
};

struct DomainSpec {
  std::string name;
  std::vector<std::string> types;
  std::vector<FluentSchema> fluents;
  std::map<std::string, double> constants;  // named scalars usable in exprs
  std::vector<Cpf> cpfs;
  Expr reward = make_num(0.0);
  std::vector<Precondition> preconditions;

  bool operator==(const DomainSpec& o) const {
    return name == o.name && types == o.types && fluents == o.fluents &&
           constants == o.constants && cpfs == o.cpfs && reward == o.reward &&
           preconditions == o.preconditions;
  }
};

struct GroundAtomSpec {
  std::string fluent;
  std::vector<std::string> args;
  SourcePos pos;

  bool operator==(const GroundAtomSpec& o) const {
    return fluent == o.fluent && args == o.args;
  }
};

struct InstanceSpec {
  std::string name;
  std::string domain_name;
  // type -> object names, in declaration order (grounding sorts later).
  std::map<std::string, std::vector<std::string>> objects;
  std::vector<GroundAtomSpec> non_fluents;     // boolean non-fluents set true
  std::map<std::string, double> scalars;       // numeric overrides by name
  std::vector<GroundAtomSpec> init;            // state fluents true at t=0
  std::vector<GroundAtomSpec> goal;            // conjunction of positive literals
  int horizon = 1;

  bool operator==(const InstanceSpec& o) const {
    return name == o.name && domain_name == o.domain_name &&
           objects == o.objects && non_fluents == o.non_fluents &&
           scalars == o.scalars && init == o.init && goal == o.goal &&
           horizon == o.horizon;
  }
};

}  // namespace foresight::lang
