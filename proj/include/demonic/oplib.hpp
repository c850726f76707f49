#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "demonic/rational.hpp"
#include "demonic/syntax.hpp"

namespace demonic {

enum class OpName {
  part_in,
  part_out,
  lpist_in,
  rpist_in,
  lpist_out,
  rpist_out,
  cycle,
  shift,
  shift_mirror,
  nreset,
};

std::string_view to_string(OpName name);
std::optional<OpName> op_from_string(std::string_view name);

// The six basic operations, in the lexicographic order of their names; this
// is the enumeration order used by the synthesis search.
const std::vector<OpName>& basic_ops();

struct PistonParams {
  // Failure cost charged when piston insertion would compress the gas to
  // zero volume, in kT ln2 units. Must be >= 0.
  std::int64_t failure_cost = 1;
};

// Builds the named operation as a macro-free statement. The piston
// operations take the failure cost from `params`; the composites embed it
// through their piston sub-operations.
Statement basic_op(OpName name, PistonParams params = {});

// Two-assignment form of NReset. Agrees with the full definition everywhere
// except on states with X = 1 and no partition, where the full definition
// skips but this form still raises the partition flag.
Statement nreset_reduced();

// Swaps the roles of left and right: X literals 0 and 1 are exchanged in
// guards and assignments. Mirrors LPistIn onto RPistIn etc.
Statement mirror_statement(const Statement& s);

struct WcDerivation {
  std::int64_t wc = 0;
  // (candidate failure cost, expected Cycle work on (1/2, F, F, 0)).
  std::vector<std::pair<std::int64_t, Rat>> table;
};

struct SearchExhausted : Error {
  using Error::Error;
};

// Smallest failure cost in [0, max_candidate] for which the Cycle extracts
// no expected work from the delocalised state. The table carries the
// expected work for every candidate tried, which follows (1 - wc)/2.
WcDerivation derive_wc(std::int64_t max_candidate);

// Source text of the shipped prelude (identical to share/prelude.dem).
std::string_view prelude_text();

// The prelude, parsed.
const Program& prelude();

// Names defined by the prelude, in definition order.
std::vector<std::string> prelude_names();

}  // namespace demonic
