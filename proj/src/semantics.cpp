#include "demonic/semantics.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <variant>

namespace demonic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Rat kHalf(1, 2);

}  // namespace

bool eval_bexp(const BExp& b, const BoxState& s) {
  return std::visit(Overloaded{
                        [](const BoolLit& n) { return n.value; },
                        [&](const PartitionFlag&) { return s.partition; },
                        [&](const PistonFlag&) { return s.piston; },
                        [&](const XEquals& n) { return s.x == n.value; },
                        [&](const Negation& n) { return !eval_bexp(n.operand, s); },
                        [&](const Disjunction& n) {
                          return eval_bexp(n.lhs, s) || eval_bexp(n.rhs, s);
                        },
                        [&](const Conjunction& n) {
                          return eval_bexp(n.lhs, s) && eval_bexp(n.rhs, s);
                        },
                    },
                    b.node().v);
}

BoxState apply_assign(const BoxState& s, const Assign& a) {
  BoxState out = s;
  switch (a.field) {
    case Field::x: out.x = std::get<ParticleProb>(a.value); break;
    case Field::a: out.partition = std::get<bool>(a.value); break;
    case Field::i: out.piston = std::get<bool>(a.value); break;
    case Field::w: {
      const auto& w = std::get<WorkExpr>(a.value);
      out.work = w.relative ? s.work + w.amount : w.amount;
      break;
    }
  }
  return out;
}

std::vector<StepEdge> step(const Config& c) {
  return std::visit(
      Overloaded{
          [](const Skip&) { return std::vector<StepEdge>{}; },
          [&](const Assign& n) {
            return std::vector<StepEdge>{
                {Rat(1), Config{Statement::skip(), apply_assign(c.state, n)}, "assign"}};
          },
          [&](const Seq& n) {
            if (n.first.is_skip()) {
              return std::vector<StepEdge>{{Rat(1), Config{n.second, c.state}, "comp2"}};
            }
            std::vector<StepEdge> out = step(Config{n.first, c.state});
            for (auto& edge : out) {
              edge.next.stmt = Statement::seq(edge.next.stmt, n.second);
              edge.rule = "comp1";
            }
            return out;
          },
          [&](const If& n) {
            const bool taken = eval_bexp(n.cond, c.state);
            return std::vector<StepEdge>{
                {Rat(1), Config{taken ? n.then_branch : n.else_branch, c.state},
                 taken ? "if1" : "if2"}};
          },
          [&](const Prob& n) {
            return std::vector<StepEdge>{{kHalf, Config{n.left, c.state}, "prob1"},
                                         {kHalf, Config{n.right, c.state}, "prob2"}};
          },
          [&](const MacroRef& n) -> std::vector<StepEdge> {
            throw Error("cannot execute unexpanded macro reference: " + n.name);
          },
      },
      c.stmt.node().v);
}

namespace {

struct ConfigKey {
  const void* stmt;
  BoxState state;

  friend bool operator==(const ConfigKey&, const ConfigKey&) = default;
};

struct ConfigKeyHash {
  std::size_t operator()(const ConfigKey& k) const noexcept {
    return hash_combine(std::hash<const void*>{}(k.stmt), BoxStateHash{}(k.state));
  }
};

using RawDist = std::vector<Dist::Entry>;
using RunMemo = std::unordered_map<ConfigKey, RawDist, ConfigKeyHash>;

void sort_merge(RawDist& d) {
  std::sort(d.begin(), d.end(),
            [](const Dist::Entry& a, const Dist::Entry& b) { return a.first < b.first; });
  RawDist merged;
  for (auto& [state, p] : d) {
    if (!merged.empty() && merged.back().first == state) {
      merged.back().second += p;
    } else {
      merged.emplace_back(state, p);
    }
  }
  d = std::move(merged);
}

// Terminal distribution of <stmt, state>, computed structurally and memoised
// on (statement identity, state). Agrees with exhaustive unfolding of step()
// -- the trace tests pin the two routes together.
const RawDist& terminal(const Statement& stmt, const BoxState& state, RunMemo& memo) {
  const ConfigKey key{stmt.id(), state};
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  RawDist result = std::visit(
      Overloaded{
          [&](const Skip&) { return RawDist{{state, Rat(1)}}; },
          [&](const Assign& n) { return RawDist{{apply_assign(state, n), Rat(1)}}; },
          [&](const Seq& n) {
            RawDist out;
            for (const auto& [mid, p] : terminal(n.first, state, memo)) {
              for (const auto& [fin, q] : terminal(n.second, mid, memo)) {
                out.emplace_back(fin, p * q);
              }
            }
            return out;
          },
          [&](const If& n) {
            return terminal(eval_bexp(n.cond, state) ? n.then_branch : n.else_branch, state, memo);
          },
          [&](const Prob& n) {
            RawDist out;
            for (const auto& [fin, p] : terminal(n.left, state, memo)) {
              out.emplace_back(fin, p * kHalf);
            }
            for (const auto& [fin, p] : terminal(n.right, state, memo)) {
              out.emplace_back(fin, p * kHalf);
            }
            return out;
          },
          [&](const MacroRef& n) -> RawDist {
            throw Error("cannot execute unexpanded macro reference: " + n.name);
          },
      },
      stmt.node().v);
  sort_merge(result);
  return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace

Dist run(const Statement& s, const BoxState& initial) {
  RunMemo memo;
  return Dist::merge(terminal(s, initial, memo));
}

Dist tau_lift(const Statement& s, const Dist& d) {
  std::vector<Dist::Entry> out;
  for (const auto& [state, p] : d.entries()) {
    for (const auto& [final_state, q] : run(s, state).entries()) {
      out.emplace_back(final_state, p * q);
    }
  }
  return Dist::merge(std::move(out));
}

namespace {

TraceNode trace_from(Config c, std::string rule, Rat probability) {
  TraceNode node{std::move(c), std::move(rule), std::move(probability), {}};
  if (node.config.is_final()) return node;
  for (StepEdge& edge : step(node.config)) {
    node.children.push_back(trace_from(std::move(edge.next), edge.rule, edge.probability));
  }
  return node;
}

void collect_leaves(const TraceNode& t, const Rat& path_probability, std::vector<Dist::Entry>& out) {
  const Rat p = path_probability * t.edge_probability;
  if (t.children.empty()) {
    out.emplace_back(t.config.state, p);
    return;
  }
  for (const TraceNode& child : t.children) collect_leaves(child, p, out);
}

}  // namespace

TraceNode trace(const Statement& s, const BoxState& initial) {
  return trace_from(Config{s, initial}, "", Rat(1));
}

Dist trace_leaves(const TraceNode& t) {
  std::vector<Dist::Entry> entries;
  collect_leaves(t, Rat(1), entries);
  return Dist::merge(std::move(entries));
}

std::vector<std::pair<Rat, std::vector<BoxState>>> boundary_chains(const std::vector<Statement>& ops,
                                                                   const BoxState& initial) {
  std::vector<std::pair<Rat, std::vector<BoxState>>> chains{{Rat(1), {initial}}};
  for (const Statement& op : ops) {
    std::vector<std::pair<Rat, std::vector<BoxState>>> next;
    for (const auto& [p, states] : chains) {
      for (const auto& [state, q] : run(op, states.back()).entries()) {
        auto extended = states;
        extended.push_back(state);
        next.emplace_back(p * q, std::move(extended));
      }
    }
    chains = std::move(next);
  }
  return chains;
}

}  // namespace demonic
