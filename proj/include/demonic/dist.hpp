#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "demonic/rational.hpp"
#include "demonic/state.hpp"

namespace demonic {

struct DistError : Error {
  using Error::Error;
};

// Finite-support probability distribution over BoxState with exact rational
// weights. Always canonical: entries sorted by state, no duplicates, no
// zero-probability entries, weights summing to exactly 1.
class Dist {
 public:
  using Entry = std::pair<BoxState, Rat>;

  // Canonicalises a raw support list: duplicate states are summed, zero
  // entries dropped, entries sorted. Throws DistError unless the weights
  // sum to exactly 1.
  static Dist merge(std::vector<Entry> entries);

  static Dist point(const BoxState& s);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const Dist&, const Dist&) = default;

 private:
  Dist() = default;
  std::vector<Entry> entries_;
};

Rat mean_work(const Dist& d);
Rat mean_x(const Dist& d);

// Adds a constant to every state's work counter.
Dist shift_work(const Dist& d, std::int64_t c);

std::string to_string(const Dist& d);

}  // namespace demonic
