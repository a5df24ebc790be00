#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "foresight/bitvec.hpp"
#include "foresight/rng.hpp"

namespace foresight {

// Ground expression nodes.  After grounding, non-fluents and named constants
// have been folded away, so the only leaves are literals, state-fluent bits
// and action atoms.  Nodes live in one arena per model and are immutable.
enum class GOp : std::uint8_t {
  False,
  True,
  Num,
  Fluent,  // payload: fluent id
  Action,  // payload: action id ("this ground action is being taken")
  Not,
  And,
  Or,
  Ite,   // kids = {cond, then, else}
  Bern,  // kids = {probability expr}
  Add,
  Sub,
  Mul,
  Neg,
};

struct GNode {
  GOp op = GOp::False;
  std::int32_t payload = -1;  // fluent/action id
  double num = 0.0;
  std::vector<std::int32_t> kids;
};

// Evaluation context: a state plus the set of action atoms currently active.
// Phase evaluation passes a single agent's action; reward evaluation passes
// both halves of a joint action.
struct EvalCtx {
  const BitVec* bits = nullptr;
  std::span<const std::int32_t> active_actions;

  bool action_active(std::int32_t id) const {
    for (auto a : active_actions)
      if (a == id) return true;
    return false;
  }
};

class GArena {
 public:
  const GNode& at(std::int32_t id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }

  std::int32_t false_node() { return intern_const(GOp::False); }
  std::int32_t true_node() { return intern_const(GOp::True); }
  std::int32_t boolean(bool b) { return b ? true_node() : false_node(); }

  std::int32_t number(double v) {
    GNode n;
    n.op = GOp::Num;
    n.num = v;
    return push(n);
  }

  std::int32_t fluent(std::int32_t id) {
    GNode n;
    n.op = GOp::Fluent;
    n.payload = id;
    return push(n);
  }

  std::int32_t action(std::int32_t id) {
    GNode n;
    n.op = GOp::Action;
    n.payload = id;
    return push(n);
  }

  std::int32_t negate(std::int32_t x) {
    if (at(x).op == GOp::True) return false_node();
    if (at(x).op == GOp::False) return true_node();
    if (at(x).op == GOp::Not) return at(x).kids[0];
    GNode n;
    n.op = GOp::Not;
    n.kids = {x};
    return push(n);
  }

  std::int32_t conj(std::vector<std::int32_t> kids) {
    return nary(GOp::And, std::move(kids));
  }
  std::int32_t disj(std::vector<std::int32_t> kids) {
    return nary(GOp::Or, std::move(kids));
  }

  std::int32_t ite(std::int32_t c, std::int32_t t, std::int32_t e) {
    if (at(c).op == GOp::True) return t;
    if (at(c).op == GOp::False) return e;
    if (t == e) return t;
    // Boolean-valued conditionals fold into plain connectives.
    if (at(t).op == GOp::True && at(e).op == GOp::False) return c;
    if (at(t).op == GOp::False && at(e).op == GOp::True) return negate(c);
    if (at(e).op == GOp::False && is_boolish(t)) return conj({c, t});
    if (at(t).op == GOp::True && is_boolish(e)) return disj({c, e});
    GNode n;
    n.op = GOp::Ite;
    n.kids = {c, t, e};
    return push(n);
  }

  std::int32_t bernoulli(std::int32_t p) {
    if (at(p).op == GOp::Num) {
      if (at(p).num <= 0.0) return false_node();
      if (at(p).num >= 1.0) return true_node();
    }
    GNode n;
    n.op = GOp::Bern;
    n.kids = {p};
    return push(n);
  }

  std::int32_t add(std::vector<std::int32_t> kids) {
    return arith_nary(GOp::Add, std::move(kids), 0.0);
  }
  std::int32_t mul(std::vector<std::int32_t> kids) {
    return arith_nary(GOp::Mul, std::move(kids), 1.0);
  }
  std::int32_t sub(std::int32_t a, std::int32_t b) {
    if (at(a).op == GOp::Num && at(b).op == GOp::Num)
      return number(at(a).num - at(b).num);
    GNode n;
    n.op = GOp::Sub;
    n.kids = {a, b};
    return push(n);
  }
  std::int32_t neg(std::int32_t a) {
    if (at(a).op == GOp::Num) return number(-at(a).num);
    if (at(a).op == GOp::Neg) return at(a).kids[0];
    GNode n;
    n.op = GOp::Neg;
    n.kids = {a};
    return push(n);
  }

  // --- evaluation -------------------------------------------------------

  // Samples a boolean value; consumes rng draws at Bernoulli nodes along the
  // evaluated path only (short-circuiting), in a deterministic order.
  bool eval_sample(std::int32_t id, const EvalCtx& ctx, Rng& rng) const;

  // Deterministic relaxation: Bernoulli(p) evaluates to p >= 0.5.
  bool eval_most_likely(std::int32_t id, const EvalCtx& ctx) const;

  // Exact probability that the expression evaluates true.  Requires each
  // Bernoulli node to be visited at most once per evaluation path (each node
  // is an independent draw), which grounding guarantees structurally.
  double prob_true(std::int32_t id, const EvalCtx& ctx) const;

  // Numeric evaluation; booleans coerce to 0/1.  Must not hit Bern nodes.
  double eval_num(std::int32_t id, const EvalCtx& ctx) const;

  // True if the subtree contains any Bern node.
  bool is_stochastic(std::int32_t id) const;
  // True if the subtree references any action atom (ids appended to `out`).
  void collect_actions(std::int32_t id, std::vector<std::int32_t>& out) const;
  void collect_fluents(std::int32_t id, std::vector<std::int32_t>& out) const;

  // Rewrites `id` with every Action atom forced to false, folding constants.
  // Used by frame analysis to find autonomous dynamics.
  std::int32_t without_actions(std::int32_t id);

 private:
  bool is_boolish(std::int32_t id) const {
    switch (at(id).op) {
      case GOp::Num:
      case GOp::Add:
      case GOp::Sub:
      case GOp::Mul:
      case GOp::Neg:
        return false;
      default:
        return true;
    }
  }

  std::int32_t nary(GOp op, std::vector<std::int32_t> kids) {
    std::vector<std::int32_t> flat;
    for (auto k : kids) {
      if (at(k).op == op) {
        for (auto kk : at(k).kids) flat.push_back(kk);
      } else if (op == GOp::And) {
        if (at(k).op == GOp::True) continue;
        if (at(k).op == GOp::False) return false_node();
        flat.push_back(k);
      } else {
        if (at(k).op == GOp::False) continue;
        if (at(k).op == GOp::True) return true_node();
        flat.push_back(k);
      }
    }
    if (flat.empty()) return op == GOp::And ? true_node() : false_node();
    if (flat.size() == 1) return flat[0];
    GNode n;
    n.op = op;
    n.kids = std::move(flat);
    return push(n);
  }

  std::int32_t arith_nary(GOp op, std::vector<std::int32_t> kids, double unit) {
    std::vector<std::int32_t> flat;
    double acc = unit;
    bool saw_const = false;
    for (auto k : kids) {
      if (at(k).op == op) {
        for (auto kk : at(k).kids) {
          if (at(kk).op == GOp::Num) {
            acc = op == GOp::Add ? acc + at(kk).num : acc * at(kk).num;
            saw_const = true;
          } else {
            flat.push_back(kk);
          }
        }
      } else if (at(k).op == GOp::Num) {
        acc = op == GOp::Add ? acc + at(k).num : acc * at(k).num;
        saw_const = true;
      } else {
        flat.push_back(k);
      }
    }
    if (op == GOp::Mul && saw_const && acc == 0.0) return number(0.0);
    if (flat.empty()) return number(acc);
    if (saw_const && acc != unit) flat.push_back(number(acc));
    if (flat.size() == 1) return flat[0];
    GNode n;
    n.op = op;
    n.kids = std::move(flat);
    return push(n);
  }

  std::int32_t intern_const(GOp op) {
    if (op == GOp::False) {
      if (false_id_ < 0) {
        GNode n;
        n.op = GOp::False;
        false_id_ = push(n);
      }
      return false_id_;
    }
    if (true_id_ < 0) {
      GNode n;
      n.op = GOp::True;
      true_id_ = push(n);
    }
    return true_id_;
  }

  std::int32_t push(GNode n) {
    nodes_.push_back(std::move(n));
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }

  std::vector<GNode> nodes_;
  std::int32_t false_id_ = -1;
  std::int32_t true_id_ = -1;
};

}  // namespace foresight
