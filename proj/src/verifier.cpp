#include "demonic/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "demonic/oplib.hpp"
#include "demonic/semantics.hpp"
#include "demonic/synthesis.hpp"

namespace demonic {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Fixed algorithm rather than std::uniform_int_distribution: reports must be
// byte-identical across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// run() with a per-statement cache; the fuzz corpus revisits the same few
// hundred support states constantly.
class CachedLift {
 public:
  explicit CachedLift(const Statement& s) : stmt_(s) {}

  Dist lift(const Dist& d) {
    std::vector<Dist::Entry> out;
    for (const auto& [state, p] : d.entries()) {
      for (const auto& [final_state, q] : result_for(state).entries()) {
        out.emplace_back(final_state, p * q);
      }
    }
    return Dist::merge(std::move(out));
  }

 private:
  const Dist& result_for(const BoxState& s) {
    const auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(s, run(stmt_, s)).first->second;
  }

  Statement stmt_;
  std::unordered_map<BoxState, Dist, BoxStateHash> cache_;
};

InvariantVerdict verdict_for(const Dist& before, const Dist& after, double eps) {
  InvariantVerdict v;
  v.phi_before = phi(before).phi;
  v.phi_after = phi(after).phi;
  v.holds_before = v.phi_before <= eps;
  v.holds_after = v.phi_after <= eps;
  if (v.holds_before && !v.holds_after) v.counterexample = before;
  return v;
}

void account(InvariantReport& report, const Dist& d, CachedLift& lift, double eps) {
  ++report.generated;
  const double before = phi(d).phi;
  if (before > eps) return;
  ++report.checked;
  const Dist after = lift.lift(d);
  const double phi_after = phi(after).phi;
  report.max_phi_after = std::max(report.max_phi_after, phi_after);
  if (phi_after > eps) {
    InvariantVerdict v;
    v.phi_before = before;
    v.phi_after = phi_after;
    v.holds_before = true;
    v.holds_after = false;
    v.counterexample = d;
    report.violations.push_back(std::move(v));
  }
}

}  // namespace

InvariantVerdict check_distribution(const Statement& s, const Dist& d, double eps) {
  return verdict_for(d, tau_lift(s, d), eps);
}

Dist random_dist(std::uint64_t seed, std::uint64_t trial, const FuzzConfig& cfg) {
  std::mt19937_64 rng(splitmix64(seed + 0x9e3779b97f4a7c15ull * (trial + 1)));

  const int support = 1 + static_cast<int>(bounded(rng, cfg.max_support));

  // Distinct base states via a partial Fisher-Yates shuffle.
  std::array<int, kBaseStateCount> order{};
  for (int i = 0; i < kBaseStateCount; ++i) order[i] = i;
  for (int i = 0; i < support; ++i) {
    const int j = i + static_cast<int>(bounded(rng, kBaseStateCount - i));
    std::swap(order[i], order[j]);
  }

  // Dyadic weights: a random composition of the denominator into
  // `support` positive parts.
  std::vector<std::int64_t> cuts{0, cfg.prob_denominator};
  std::vector<std::int64_t> interior(cfg.prob_denominator - 1);
  for (std::size_t i = 0; i < interior.size(); ++i) interior[i] = static_cast<std::int64_t>(i) + 1;
  for (int i = 0; i < support - 1; ++i) {
    const std::size_t j = i + bounded(rng, interior.size() - i);
    std::swap(interior[i], interior[j]);
    cuts.push_back(interior[i]);
  }
  std::sort(cuts.begin(), cuts.end());

  const std::int64_t work_span = cfg.max_work - cfg.min_work + 1;
  std::vector<Dist::Entry> entries;
  for (int i = 0; i < support; ++i) {
    const BaseState base = base_state_at(order[i]);
    BoxState s{base.x, base.partition, base.piston,
               cfg.min_work + static_cast<std::int64_t>(bounded(rng, work_span))};
    entries.emplace_back(s, Rat(cuts[i + 1] - cuts[i], cfg.prob_denominator));
  }
  return Dist::merge(std::move(entries));
}

InvariantReport check_invariance(const Statement& s, const FuzzConfig& cfg, std::string name) {
  InvariantReport report;
  report.statement = std::move(name);
  CachedLift lift(s);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    account(report, random_dist(cfg.seed, trial, cfg), lift, cfg.eps);
  }
  return report;
}

InvariantReport check_points(const Statement& s, const FuzzConfig& cfg, std::string name) {
  InvariantReport report;
  report.statement = std::move(name);
  CachedLift lift(s);
  for (const BaseState& base : all_base_states()) {
    for (std::int64_t w = cfg.min_work; w <= cfg.max_work; ++w) {
      account(report, Dist::point(BoxState{base.x, base.partition, base.piston, w}), lift, cfg.eps);
    }
  }
  return report;
}

BasicOpsReport check_all_basic(int trials_per_statement, std::uint64_t seed, int max_len) {
  BasicOpsReport out;

  std::vector<std::pair<std::string, Statement>> statements;
  std::vector<std::pair<std::string, Statement>> frontier{{"", Statement::skip()}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::string, Statement>> next;
    for (const auto& [name, stmt] : frontier) {
      for (const OpName op : basic_ops()) {
        std::string next_name =
            name.empty() ? std::string(to_string(op)) : name + ";" + std::string(to_string(op));
        Statement next_stmt =
            name.empty() ? basic_op(op) : Statement::seq(stmt, basic_op(op));
        next.emplace_back(next_name, next_stmt);
      }
    }
    statements.insert(statements.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::uint64_t statement_index = 0;
  for (const auto& [name, stmt] : statements) {
    InvariantReport points = check_points(stmt, FuzzConfig{}, name + " [points]");
    FuzzConfig fuzz;
    fuzz.trials = trials_per_statement;
    fuzz.seed = splitmix64(seed) + statement_index++;
    InvariantReport random = check_invariance(stmt, fuzz, name + " [random]");
    for (auto* r : {&points, &random}) {
      out.total_generated += r->generated;
      out.total_checked += r->checked;
      out.any_violation = out.any_violation || !r->ok();
    }
    out.entries.push_back(std::move(points));
    out.entries.push_back(std::move(random));
  }
  return out;
}

KelvinAudit audit_kelvin(const Statement& s, const BoxState& initial) {
  KelvinAudit audit;
  audit.initial = initial;
  const Dist final_dist = run(s, initial);
  audit.mean_w_final = mean_work(final_dist);
  audit.returned_mass = Rat(0);
  for (const auto& [state, p] : final_dist.entries()) {
    if (state.x == initial.x && state.partition == initial.partition && state.piston == initial.piston) {
      audit.returned_mass += p;
    }
  }
  audit.is_cycle = audit.returned_mass == Rat(1);
  audit.violation = audit.is_cycle && audit.mean_w_final > Rat(initial.work);
  return audit;
}

std::string to_string(OperationKind k) {
  switch (k) {
    case OperationKind::measurement: return "measurement";
    case OperationKind::reset: return "reset";
    case OperationKind::erasure: return "erasure";
    case OperationKind::other: return "other";
  }
  throw Error("invalid OperationKind");
}

OperationClass classify(const Statement& s, const Dist& d0, double eps) {
  const PhiReport before = phi(d0);
  const PhiReport after = phi(tau_lift(s, d0));

  OperationClass c;
  c.branch_entropy_before = before.mean_branch_entropy;
  c.branch_entropy_after = after.mean_branch_entropy;
  c.ensemble_entropy_before = before.ensemble_entropy;
  c.ensemble_entropy_after = after.ensemble_entropy;
  c.work_delta = after.mean_w - before.mean_w;

  const bool branch_killed = c.branch_entropy_before > eps && c.branch_entropy_after <= eps;
  const bool branch_stays_zero = c.branch_entropy_before <= eps && c.branch_entropy_after <= eps;
  const bool ensemble_killed = c.ensemble_entropy_before > eps && c.ensemble_entropy_after <= eps;
  const bool ensemble_kept =
      std::abs(c.ensemble_entropy_after - c.ensemble_entropy_before) <= eps;

  if (branch_killed && ensemble_killed) {
    c.kind = OperationKind::erasure;
  } else if (branch_killed && ensemble_kept) {
    c.kind = OperationKind::measurement;
  } else if (branch_stays_zero && ensemble_killed) {
    c.kind = OperationKind::reset;
  } else {
    c.kind = OperationKind::other;
  }
  return c;
}

std::vector<PhiReport> ledger(const Statement& s, const Dist& d0) {
  std::vector<PhiReport> reports{phi(d0)};
  Dist current = d0;
  for (const Statement& segment : seq_split(s)) {
    if (segment.is_skip()) continue;
    current = tau_lift(segment, current);
    reports.push_back(phi(current));
  }
  return reports;
}

}  // namespace demonic
