#pragma once

#include <nlohmann/json.hpp>

#include "demonic/dist.hpp"
#include "demonic/oplib.hpp"
#include "demonic/synthesis.hpp"
#include "demonic/thermo.hpp"
#include "demonic/verifier.hpp"

namespace demonic {

// Distributions serialise as a list of {"p", "state"} pairs in canonical
// state order; probabilities are exact rational strings.
nlohmann::json dist_to_json(const Dist& d);
Dist dist_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PhiReport& r);
nlohmann::json to_json(const InvariantVerdict& v);
nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const BasicOpsReport& r);
nlohmann::json to_json(const KelvinAudit& a);
nlohmann::json to_json(const OperationClass& c);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const ErasureSearchResult& r);
nlohmann::json to_json(const WcDerivation& d);

}  // namespace demonic
