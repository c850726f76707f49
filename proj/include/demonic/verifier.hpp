#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "demonic/dist.hpp"
#include "demonic/syntax.hpp"
#include "demonic/thermo.hpp"

namespace demonic {

// Result of checking phi <= eps across one application of a statement.
struct InvariantVerdict {
  bool holds_before = false;
  bool holds_after = false;
  double phi_before = 0.0;
  double phi_after = 0.0;
  // Present exactly when the invariant held before and broke after.
  std::optional<Dist> counterexample;
};

InvariantVerdict check_distribution(const Statement& s, const Dist& d, double eps = kEpsilon);

struct FuzzConfig {
  int trials = 1000;
  std::uint64_t seed = 0;
  double eps = kEpsilon;
  int max_support = 6;         // support sizes 1..max_support
  int prob_denominator = 64;   // dyadic weights k/denominator
  std::int64_t min_work = -4;
  std::int64_t max_work = 4;
};

// Deterministic distribution generator: support over distinct base states,
// dyadic weights, bounded work counters. Trial i depends only on (seed, i).
Dist random_dist(std::uint64_t seed, std::uint64_t trial, const FuzzConfig& cfg);

struct InvariantReport {
  std::string statement;
  long generated = 0;  // distributions drawn
  long checked = 0;    // those with phi <= eps before the statement
  double max_phi_after = 0.0;
  std::vector<InvariantVerdict> violations;

  bool ok() const { return violations.empty(); }
};

// Fuzzes `trials` random distributions through the statement and reports
// every invariant violation found. Deterministic given the seed.
InvariantReport check_invariance(const Statement& s, const FuzzConfig& cfg, std::string name = {});

// Exhaustive sweep over the point distributions on the 12 base states with
// work counters in [cfg.min_work, cfg.max_work].
InvariantReport check_points(const Statement& s, const FuzzConfig& cfg, std::string name = {});

struct BasicOpsReport {
  std::vector<InvariantReport> entries;
  long total_generated = 0;
  long total_checked = 0;
  bool any_violation = false;
};

// Runs point sweeps plus fuzzing over the six basic operations and all their
// compositions up to max_len.
BasicOpsReport check_all_basic(int trials_per_statement, std::uint64_t seed, int max_len = 3);

// Kelvin-statement audit: does the program return the initial configuration
// (X, A, I) with probability 1 while extracting expected work?
struct KelvinAudit {
  BoxState initial;
  Rat returned_mass;   // probability mass on the initial (X, A, I)
  bool is_cycle = false;
  Rat mean_w_final;
  bool violation = false;
};

KelvinAudit audit_kelvin(const Statement& s, const BoxState& initial);

enum class OperationKind { measurement, reset, erasure, other };

std::string to_string(OperationKind k);

struct OperationClass {
  OperationKind kind = OperationKind::other;
  double branch_entropy_before = 0.0;
  double branch_entropy_after = 0.0;
  double ensemble_entropy_before = 0.0;
  double ensemble_entropy_after = 0.0;
  Rat work_delta;
};

// Classifies the statement's action on d0 by its entropy signature:
// measurement kills branch entropy and keeps ensemble entropy; reset acts on
// a measured state and kills ensemble entropy; erasure kills both.
OperationClass classify(const Statement& s, const Dist& d0, double eps = kEpsilon);

// One PhiReport per basic-op boundary: the initial distribution, then after
// each segment of the top-level sequential composition (skips contribute no
// boundary).
std::vector<PhiReport> ledger(const Statement& s, const Dist& d0);

}  // namespace demonic
