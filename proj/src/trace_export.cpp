#include "demonic/trace_export.hpp"

#include <sstream>

#include "demonic/pretty.hpp"

namespace demonic {

namespace {

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

int emit_dot(const TraceNode& t, std::ostream& out, int& counter) {
  const int id = counter++;
  out << "  n" << id << " [label=\"" << escape(pretty(t.config.stmt)) << "\\n"
      << escape(to_string(t.config.state)) << "\"";
  if (t.children.empty()) out << ", shape=box";
  out << "];\n";
  for (const TraceNode& child : t.children) {
    const int child_id = emit_dot(child, out, counter);
    out << "  n" << id << " -> n" << child_id << " [label=\"" << child.rule << " "
        << to_string(child.edge_probability) << "\"];\n";
  }
  return id;
}

}  // namespace

std::string trace_to_dot(const TraceNode& t) {
  std::ostringstream out;
  out << "digraph trace {\n  node [shape=ellipse];\n";
  int counter = 0;
  emit_dot(t, out, counter);
  out << "}\n";
  return out.str();
}

nlohmann::json trace_to_json(const TraceNode& t) {
  nlohmann::json node;
  node["stmt"] = pretty(t.config.stmt);
  node["state"] = to_string(t.config.state);
  node["rule"] = t.rule;
  auto children = nlohmann::json::array();
  for (const TraceNode& child : t.children) {
    children.push_back({{"p", to_string(child.edge_probability)}, {"node", trace_to_json(child)}});
  }
  node["children"] = std::move(children);
  return node;
}

}  // namespace demonic
