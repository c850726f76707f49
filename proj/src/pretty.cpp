#include "demonic/pretty.hpp"

#include <sstream>
#include <variant>

namespace demonic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Composite guards self-parenthesise, so they can be embedded anywhere.
std::string pretty_bexp(const BExp& b) {
  return std::visit(
      Overloaded{
          [](const BoolLit& n) -> std::string { return n.value ? "true" : "false"; },
          [](const PartitionFlag&) -> std::string { return "s.A"; },
          [](const PistonFlag&) -> std::string { return "s.I"; },
          [](const XEquals& n) -> std::string { return "s.X = " + to_string(n.value); },
          [](const Negation& n) -> std::string {
            const auto& v = n.operand.node().v;
            const bool atom = std::holds_alternative<BoolLit>(v) ||
                              std::holds_alternative<PartitionFlag>(v) ||
                              std::holds_alternative<PistonFlag>(v);
            return atom ? "not " + pretty_bexp(n.operand) : "not (" + pretty_bexp(n.operand) + ")";
          },
          [](const Disjunction& n) -> std::string {
            return "(" + pretty_bexp(n.lhs) + " or " + pretty_bexp(n.rhs) + ")";
          },
          [](const Conjunction& n) -> std::string {
            return "(" + pretty_bexp(n.lhs) + " and " + pretty_bexp(n.rhs) + ")";
          },
      },
      b.node().v);
}

std::string pretty_stmt(const Statement& s);

std::string pretty_assign(const Assign& a) {
  std::string value = std::visit(
      Overloaded{
          [](ParticleProb v) -> std::string { return to_string(v); },
          [](bool v) -> std::string { return v ? "true" : "false"; },
          [](const WorkExpr& v) -> std::string {
            if (!v.relative) return std::to_string(v.amount);
            if (v.amount < 0) return "w - " + std::to_string(-v.amount);
            return "w + " + std::to_string(v.amount);
          },
      },
      a.value);
  return "s." + to_string(a.field) + " := " + value;
}

std::string pretty_stmt(const Statement& s) {
  return std::visit(
      Overloaded{
          [](const Skip&) -> std::string { return "skip"; },
          [](const Assign& n) -> std::string { return pretty_assign(n); },
          [](const Seq& n) -> std::string {
            // A Seq or If on the left would greedily swallow the "; ...".
            const auto& lv = n.first.node().v;
            const bool wrap = std::holds_alternative<Seq>(lv) || std::holds_alternative<If>(lv);
            const std::string left = pretty_stmt(n.first);
            return (wrap ? "(" + left + ")" : left) + " ; " + pretty_stmt(n.second);
          },
          [](const If& n) -> std::string {
            return "if " + pretty_bexp(n.cond) + " then (" + pretty_stmt(n.then_branch) + ") else (" +
                   pretty_stmt(n.else_branch) + ")";
          },
          [](const Prob& n) -> std::string {
            return "[" + pretty_stmt(n.left) + "] (+) [" + pretty_stmt(n.right) + "]";
          },
          [](const MacroRef& n) -> std::string { return n.name; },
      },
      s.node().v);
}

}  // namespace

std::string pretty(const BExp& b) { return pretty_bexp(b); }

std::string pretty(const Statement& s) { return pretty_stmt(s); }

std::string pretty(const Program& p) {
  std::ostringstream out;
  for (const auto& [name, body] : p.definitions) {
    out << name << " = " << pretty_stmt(body) << "\n";
  }
  if (p.main) {
    if (!p.definitions.empty()) out << "\n";
    out << pretty_stmt(*p.main) << "\n";
  }
  return out.str();
}

}  // namespace demonic
