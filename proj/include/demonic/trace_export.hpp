#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "demonic/semantics.hpp"

namespace demonic {

// Graphviz rendering: one node per configuration, edges labelled with the
// rule name and probability.
std::string trace_to_dot(const TraceNode& t);

// {"stmt": ..., "state": ..., "rule": ..., "children": [{"p": "1/2", "node": ...}]}
nlohmann::json trace_to_json(const TraceNode& t);

}  // namespace demonic
