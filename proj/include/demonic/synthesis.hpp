#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "demonic/dist.hpp"
#include "demonic/oplib.hpp"
#include "demonic/syntax.hpp"

namespace demonic {

// (X, A, I) with the work counter abstracted away. Exactly 12 values.
struct BaseState {
  ParticleProb x = ParticleProb::half;
  bool partition = false;
  bool piston = false;

  friend auto operator<=>(const BaseState&, const BaseState&) = default;
};

inline constexpr int kBaseStateCount = 12;

int base_index(const BaseState& b);
BaseState base_state_at(int index);
const std::array<BaseState, kBaseStateCount>& all_base_states();

std::string to_string(const BaseState& b);

struct AbstractionError : Error {
  using Error::Error;
};

// Work-offset abstraction of a statement's induced map: each base state maps
// to a distribution over (base state, work delta). Sound for statements
// whose work assignments are all of offset form, which guards can never
// inspect.
class TauMap {
 public:
  struct Outcome {
    BaseState to;
    std::int64_t work_delta = 0;
    Rat probability;

    friend bool operator==(const Outcome&, const Outcome&) = default;
  };

  using Row = std::vector<Outcome>;

  static TauMap identity();
  // Rows are canonicalised (merged, sorted); each must sum to 1.
  static TauMap from_rows(std::array<Row, kBaseStateCount> rows);

  const Row& row(const BaseState& b) const { return rows_[base_index(b)]; }
  const Row& row(int index) const { return rows_[index]; }

  friend bool operator==(const TauMap&, const TauMap&) = default;

 private:
  TauMap() = default;
  std::array<Row, kBaseStateCount> rows_;
};

struct TauMapHash {
  std::size_t operator()(const TauMap& m) const noexcept;
};

// Abstracts a macro-free statement; throws AbstractionError if it assigns an
// absolute work literal.
TauMap abstract_tau(const Statement& s);

// Sequential composition: f first, then g, adding work deltas.
TauMap compose(const TauMap& f, const TauMap& g);

// Reconstitutes the abstract map as a concrete action on distributions.
Dist apply_tau(const TauMap& m, const Dist& d);

struct SearchResult {
  bool found = false;
  std::optional<std::vector<OpName>> witness;
  int depth_searched = 0;
  long maps_explored = 0;
  // True when some level added no new maps, i.e. the reachable set is closed
  // and the result is exhaustive rather than depth-bounded.
  bool closure = false;
};

// Breadth-first search over compositions of the six basic operations
// (failure cost 1) for a composition whose abstraction equals the target.
// The empty composition (identity) counts at depth 0. Deterministic:
// operations are tried in lexicographic name order, so the first witness
// found is the shortest and lexicographically least.
SearchResult search_for(const TauMap& target, int max_depth);

enum class ErasureMode {
  all_inputs,          // every base state must end with the target X (strict)
  unknown_input_only,  // only the delocalised no-partition no-piston input
};

struct ErasureSearchResult {
  bool found = false;
  Rat cost;  // minimum expected work input on the unknown-bit input
  std::vector<OpName> witness;
  int depth_searched = 0;
  long maps_explored = 0;
  bool closure = false;
  ErasureMode mode = ErasureMode::all_inputs;
  ParticleProb target = ParticleProb::zero;
};

// Searches compositions up to max_depth that localise the particle at
// target X (per `mode`), and returns the cheapest: cost = -max <delta w> on
// input (1/2, F, F). Ties go to the shortest, then lexicographically least
// witness.
ErasureSearchResult min_erasure_cost(int max_depth, ParticleProb target,
                                     ErasureMode mode = ErasureMode::all_inputs);

}  // namespace demonic
