#include "demonic/synthesis.hpp"

#include <algorithm>
#include <unordered_set>
#include <variant>

#include "demonic/semantics.hpp"

namespace demonic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool outcome_less(const TauMap::Outcome& a, const TauMap::Outcome& b) {
  if (a.to != b.to) return a.to < b.to;
  return a.work_delta < b.work_delta;
}

// Any absolute work assignment breaks the offset abstraction.
bool offset_form_only(const Statement& s) {
  return std::visit(Overloaded{
                        [](const Skip&) { return true; },
                        [](const Assign& n) {
                          const auto* w = std::get_if<WorkExpr>(&n.value);
                          return w == nullptr || w->relative;
                        },
                        [](const Seq& n) {
                          return offset_form_only(n.first) && offset_form_only(n.second);
                        },
                        [](const If& n) {
                          return offset_form_only(n.then_branch) && offset_form_only(n.else_branch);
                        },
                        [](const Prob& n) {
                          return offset_form_only(n.left) && offset_form_only(n.right);
                        },
                        [](const MacroRef&) { return false; },
                    },
                    s.node().v);
}

}  // namespace

int base_index(const BaseState& b) {
  return static_cast<int>(b.x) * 4 + (b.partition ? 2 : 0) + (b.piston ? 1 : 0);
}

BaseState base_state_at(int index) {
  BaseState b;
  b.x = static_cast<ParticleProb>(index / 4);
  b.partition = (index & 2) != 0;
  b.piston = (index & 1) != 0;
  return b;
}

const std::array<BaseState, kBaseStateCount>& all_base_states() {
  static const auto states = [] {
    std::array<BaseState, kBaseStateCount> out{};
    for (int i = 0; i < kBaseStateCount; ++i) out[i] = base_state_at(i);
    return out;
  }();
  return states;
}

std::string to_string(const BaseState& b) {
  return "(" + to_string(b.x) + ", " + (b.partition ? "T" : "F") + ", " + (b.piston ? "T" : "F") + ")";
}

TauMap TauMap::identity() {
  std::array<Row, kBaseStateCount> rows;
  for (int i = 0; i < kBaseStateCount; ++i) {
    rows[i] = {Outcome{base_state_at(i), 0, Rat(1)}};
  }
  return from_rows(std::move(rows));
}

TauMap TauMap::from_rows(std::array<Row, kBaseStateCount> rows) {
  TauMap m;
  for (int i = 0; i < kBaseStateCount; ++i) {
    Row& row = rows[i];
    std::sort(row.begin(), row.end(), outcome_less);
    Row merged;
    Rat total(0);
    for (const Outcome& o : row) {
      if (o.probability == Rat(0)) continue;
      total += o.probability;
      if (!merged.empty() && merged.back().to == o.to && merged.back().work_delta == o.work_delta) {
        merged.back().probability += o.probability;
      } else {
        merged.push_back(o);
      }
    }
    if (total != Rat(1)) {
      throw Error("TauMap row for " + to_string(base_state_at(i)) + " sums to " + to_string(total));
    }
    m.rows_[i] = std::move(merged);
  }
  return m;
}

std::size_t TauMapHash::operator()(const TauMap& m) const noexcept {
  std::size_t h = 0x2c1b3c6dull;
  for (int i = 0; i < kBaseStateCount; ++i) {
    for (const TauMap::Outcome& o : m.row(i)) {
      h = hash_combine(h, static_cast<std::size_t>(base_index(o.to)));
      h = hash_combine(h, std::hash<std::int64_t>{}(o.work_delta));
      h = hash_combine(h, RatHash{}(o.probability));
    }
    h = hash_combine(h, 0x9dull);
  }
  return h;
}

TauMap abstract_tau(const Statement& s) {
  if (s.contains_macro_ref()) {
    throw AbstractionError("abstract_tau requires a macro-free statement");
  }
  if (!offset_form_only(s)) {
    throw AbstractionError(
        "statement assigns an absolute work literal; the work-offset abstraction does not apply");
  }
  std::array<TauMap::Row, kBaseStateCount> rows;
  for (int i = 0; i < kBaseStateCount; ++i) {
    const BaseState b = base_state_at(i);
    for (const auto& [state, p] : run(s, BoxState{b.x, b.partition, b.piston, 0}).entries()) {
      rows[i].push_back(TauMap::Outcome{BaseState{state.x, state.partition, state.piston}, state.work, p});
    }
  }
  return TauMap::from_rows(std::move(rows));
}

TauMap compose(const TauMap& f, const TauMap& g) {
  std::array<TauMap::Row, kBaseStateCount> rows;
  for (int i = 0; i < kBaseStateCount; ++i) {
    for (const TauMap::Outcome& first : f.row(i)) {
      for (const TauMap::Outcome& second : g.row(first.to)) {
        rows[i].push_back(TauMap::Outcome{second.to, first.work_delta + second.work_delta,
                                          first.probability * second.probability});
      }
    }
  }
  return TauMap::from_rows(std::move(rows));
}

Dist apply_tau(const TauMap& m, const Dist& d) {
  std::vector<Dist::Entry> out;
  for (const auto& [state, p] : d.entries()) {
    for (const TauMap::Outcome& o : m.row(BaseState{state.x, state.partition, state.piston})) {
      out.emplace_back(BoxState{o.to.x, o.to.partition, o.to.piston, state.work + o.work_delta},
                       p * o.probability);
    }
  }
  return Dist::merge(std::move(out));
}

namespace {

struct Reached {
  TauMap map;
  std::vector<OpName> witness;
  int depth = 0;
};

// Breadth-first closure of compositions of the six basic operations.
// Deterministic: frontier in discovery order, operations in lexicographic
// order. Calls visit(reached) for every distinct map including the identity;
// visit returning false stops the search early.
template <typename Visit>
void enumerate_maps(int max_depth, long& maps_explored, int& depth_searched, bool& closure,
                    Visit visit) {
  std::vector<std::pair<OpName, TauMap>> ops;
  for (const OpName op : basic_ops()) ops.emplace_back(op, abstract_tau(basic_op(op)));

  std::unordered_set<TauMap, TauMapHash> visited;
  std::vector<Reached> frontier;

  maps_explored = 0;
  depth_searched = 0;
  closure = false;

  Reached identity{TauMap::identity(), {}, 0};
  visited.insert(identity.map);
  ++maps_explored;
  if (!visit(identity)) return;
  frontier.push_back(std::move(identity));

  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<Reached> next;
    for (const Reached& r : frontier) {
      for (const auto& [op, tau] : ops) {
        TauMap m = compose(r.map, tau);
        if (!visited.insert(m).second) continue;
        Reached reached{std::move(m), r.witness, depth};
        reached.witness.push_back(op);
        ++maps_explored;
        depth_searched = depth;
        if (!visit(reached)) return;
        next.push_back(std::move(reached));
      }
    }
    if (next.empty()) {
      // No new maps: the reachable set is closed and the search exhaustive.
      closure = true;
      depth_searched = depth;
      return;
    }
    frontier = std::move(next);
  }
  depth_searched = max_depth;
}

}  // namespace

SearchResult search_for(const TauMap& target, int max_depth) {
  if (max_depth < 1) throw Error("search_for: max_depth must be >= 1");
  SearchResult result;
  enumerate_maps(max_depth, result.maps_explored, result.depth_searched, result.closure,
                 [&](const Reached& r) {
                   if (r.map == target) {
                     result.found = true;
                     result.witness = r.witness;
                     result.depth_searched = r.depth;
                     return false;
                   }
                   return true;
                 });
  return result;
}

ErasureSearchResult min_erasure_cost(int max_depth, ParticleProb target, ErasureMode mode) {
  if (max_depth < 1) throw Error("min_erasure_cost: max_depth must be >= 1");
  const int unknown_input = base_index(BaseState{ParticleProb::half, false, false});

  ErasureSearchResult result;
  result.mode = mode;
  result.target = target;

  std::optional<Rat> best_mean_delta;
  enumerate_maps(max_depth, result.maps_explored, result.depth_searched, result.closure,
                 [&](const Reached& r) {
                   const auto localised = [&](const TauMap::Row& row) {
                     return std::all_of(row.begin(), row.end(),
                                        [&](const TauMap::Outcome& o) { return o.to.x == target; });
                   };
                   if (!localised(r.map.row(unknown_input))) return true;
                   if (mode == ErasureMode::all_inputs) {
                     for (int i = 0; i < kBaseStateCount; ++i) {
                       if (!localised(r.map.row(i))) return true;
                     }
                   }
                   Rat mean_delta(0);
                   for (const TauMap::Outcome& o : r.map.row(unknown_input)) {
                     mean_delta += o.probability * Rat(o.work_delta);
                   }
                   // BFS order breaks ties toward the shortest, then
                   // lexicographically least witness.
                   if (!best_mean_delta || mean_delta > *best_mean_delta) {
                     best_mean_delta = mean_delta;
                     result.found = true;
                     result.witness = r.witness;
                   }
                   return true;
                 });
  if (best_mean_delta) result.cost = -*best_mean_delta;
  return result;
}

}  // namespace demonic
