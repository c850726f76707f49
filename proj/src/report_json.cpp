#include "demonic/report_json.hpp"

namespace demonic {

using nlohmann::json;

json dist_to_json(const Dist& d) {
  json out = json::array();
  for (const auto& [state, p] : d.entries()) {
    out.push_back({{"p", to_string(p)}, {"state", to_string(state)}});
  }
  return out;
}

Dist dist_from_json(const json& j) {
  std::vector<Dist::Entry> entries;
  for (const auto& item : j) {
    const auto p = rat_from_string(item.at("p").get<std::string>());
    if (!p) throw Error("bad probability in distribution JSON");
    entries.emplace_back(parse_box_state(item.at("state").get<std::string>()), *p);
  }
  return Dist::merge(std::move(entries));
}

json to_json(const PhiReport& r) {
  return {{"mean_w", to_string(r.mean_w)},
          {"mean_branch_entropy", r.mean_branch_entropy},
          {"ensemble_entropy", r.ensemble_entropy},
          {"sigma", r.sigma},
          {"phi", r.phi}};
}

json to_json(const InvariantVerdict& v) {
  json out = {{"holds_before", v.holds_before},
              {"holds_after", v.holds_after},
              {"phi_before", v.phi_before},
              {"phi_after", v.phi_after}};
  if (v.counterexample) out["counterexample"] = dist_to_json(*v.counterexample);
  return out;
}

json to_json(const InvariantReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"statement", r.statement},
          {"generated", r.generated},
          {"checked", r.checked},
          {"max_phi_after", r.max_phi_after},
          {"violations", violations}};
}

json to_json(const BasicOpsReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    // Full per-statement dumps are large; keep the aggregate readable and
    // only expand entries that found something.
    if (e.ok()) continue;
    entries.push_back(to_json(e));
  }
  return {{"statements", static_cast<long>(r.entries.size())},
          {"total_generated", r.total_generated},
          {"total_checked", r.total_checked},
          {"any_violation", r.any_violation},
          {"violating_statements", entries}};
}

json to_json(const KelvinAudit& a) {
  return {{"initial", to_string(a.initial)},
          {"returned_mass", to_string(a.returned_mass)},
          {"is_cycle", a.is_cycle},
          {"mean_w_final", to_string(a.mean_w_final)},
          {"violation", a.violation}};
}

json to_json(const OperationClass& c) {
  return {{"kind", to_string(c.kind)},
          {"branch_entropy_before", c.branch_entropy_before},
          {"branch_entropy_after", c.branch_entropy_after},
          {"ensemble_entropy_before", c.ensemble_entropy_before},
          {"ensemble_entropy_after", c.ensemble_entropy_after},
          {"work_delta", to_string(c.work_delta)}};
}

namespace {

json witness_to_json(const std::vector<OpName>& witness) {
  json out = json::array();
  for (const OpName op : witness) out.push_back(std::string(to_string(op)));
  return out;
}

}  // namespace

json to_json(const SearchResult& r) {
  json out = {{"found", r.found},
              {"depth_searched", r.depth_searched},
              {"maps_explored", r.maps_explored},
              {"closure", r.closure}};
  if (r.witness) out["witness"] = witness_to_json(*r.witness);
  return out;
}

json to_json(const ErasureSearchResult& r) {
  json out = {{"found", r.found},
              {"depth_searched", r.depth_searched},
              {"maps_explored", r.maps_explored},
              {"closure", r.closure},
              {"mode", r.mode == ErasureMode::all_inputs ? "all-inputs" : "unknown-input-only"},
              {"target_x", to_string(r.target)}};
  if (r.found) {
    out["cost"] = to_string(r.cost);
    out["witness"] = witness_to_json(r.witness);
  }
  return out;
}

json to_json(const WcDerivation& d) {
  json table = json::array();
  for (const auto& [wc, mean] : d.table) {
    table.push_back({{"wc", wc}, {"mean_w", to_string(mean)}});
  }
  return {{"wc", d.wc}, {"table", table}};
}

}  // namespace demonic
