#pragma once

#include <string>
#include <vector>

#include "demonic/dist.hpp"
#include "demonic/syntax.hpp"

namespace demonic {

// Total evaluation of a guard against a state.
bool eval_bexp(const BExp& b, const BoxState& s);

// Standard update function s[x -> a].
BoxState apply_assign(const BoxState& s, const Assign& a);

struct Config {
  Statement stmt;
  BoxState state;

  bool is_final() const { return stmt.is_skip(); }
};

// One outgoing transition, labelled with the transition-system rule that
// produced it (assign, comp1, comp2, if1, if2, prob1, prob2).
struct StepEdge {
  Rat probability;
  Config next;
  const char* rule;
};

// All outgoing transitions of a configuration. Final configurations have
// none; otherwise the probabilities sum to exactly 1. The statement must be
// macro-free.
std::vector<StepEdge> step(const Config& c);

// Exhaustively unfolds the transition system to the terminal distribution,
// multiplying path probabilities and merging equal final states. Guaranteed
// to terminate: the language has no loops.
Dist run(const Statement& s, const BoxState& initial);

// Kleisli lift of run to distributions.
Dist tau_lift(const Statement& s, const Dist& d);

// Full derivation tree. `rule` and `edge_probability` describe the edge
// into the node; the root carries probability 1 and an empty rule.
struct TraceNode {
  Config config;
  std::string rule;
  Rat edge_probability{1};
  std::vector<TraceNode> children;
};

TraceNode trace(const Statement& s, const BoxState& initial);

// Collects the leaves of a trace into a distribution; equals run().
Dist trace_leaves(const TraceNode& t);

// Per-branch state chains at operation-boundary granularity: runs the given
// statements in order, splitting on probabilistic branches, and records the
// state after each one. Mirrors how the derivation chains are usually
// displayed. Returns (path probability, [initial, after op1, ...]).
std::vector<std::pair<Rat, std::vector<BoxState>>> boundary_chains(const std::vector<Statement>& ops,
                                                                   const BoxState& initial);

}  // namespace demonic
