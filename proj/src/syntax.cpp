#include "demonic/syntax.hpp"

#include <algorithm>
#include <unordered_map>

namespace demonic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

// --- BExp -------------------------------------------------------------------

BExp BExp::lit(bool value) { return BExp(std::make_shared<const BExpNode>(BExpNode{BoolLit{value}})); }
BExp BExp::partition_flag() { return BExp(std::make_shared<const BExpNode>(BExpNode{PartitionFlag{}})); }
BExp BExp::piston_flag() { return BExp(std::make_shared<const BExpNode>(BExpNode{PistonFlag{}})); }
BExp BExp::x_equals(ParticleProb value) {
  return BExp(std::make_shared<const BExpNode>(BExpNode{XEquals{value}}));
}
BExp BExp::negation(BExp operand) {
  return BExp(std::make_shared<const BExpNode>(BExpNode{Negation{std::move(operand)}}));
}
BExp BExp::disjunction(BExp lhs, BExp rhs) {
  return BExp(std::make_shared<const BExpNode>(BExpNode{Disjunction{std::move(lhs), std::move(rhs)}}));
}
BExp BExp::conjunction(BExp lhs, BExp rhs) {
  return BExp(std::make_shared<const BExpNode>(BExpNode{Conjunction{std::move(lhs), std::move(rhs)}}));
}

bool operator==(const BExp& a, const BExp& b) {
  if (a.node_.get() == b.node_.get()) return true;
  return std::visit(
      Overloaded{
          [](const BoolLit& x, const BoolLit& y) { return x.value == y.value; },
          [](const PartitionFlag&, const PartitionFlag&) { return true; },
          [](const PistonFlag&, const PistonFlag&) { return true; },
          [](const XEquals& x, const XEquals& y) { return x.value == y.value; },
          [](const Negation& x, const Negation& y) { return x.operand == y.operand; },
          [](const Disjunction& x, const Disjunction& y) { return x.lhs == y.lhs && x.rhs == y.rhs; },
          [](const Conjunction& x, const Conjunction& y) { return x.lhs == y.lhs && x.rhs == y.rhs; },
          [](const auto&, const auto&) { return false; },
      },
      a.node().v, b.node().v);
}

// --- Statement ---------------------------------------------------------------

std::string to_string(Field f) {
  switch (f) {
    case Field::x: return "X";
    case Field::a: return "A";
    case Field::i: return "I";
    case Field::w: return "w";
  }
  throw Error("invalid Field");
}

Statement Statement::skip() {
  static const Statement instance(std::make_shared<const StmtNode>(StmtNode{Skip{}}));
  return instance;
}
Statement Statement::assign_x(ParticleProb value) {
  return Statement(std::make_shared<const StmtNode>(StmtNode{Assign{Field::x, value}}));
}
Statement Statement::assign_partition(bool value) {
  return Statement(std::make_shared<const StmtNode>(StmtNode{Assign{Field::a, value}}));
}
Statement Statement::assign_piston(bool value) {
  return Statement(std::make_shared<const StmtNode>(StmtNode{Assign{Field::i, value}}));
}
Statement Statement::assign_work(WorkExpr value) {
  return Statement(std::make_shared<const StmtNode>(StmtNode{Assign{Field::w, value}}));
}
Statement Statement::seq(Statement first, Statement second) {
  return Statement(std::make_shared<const StmtNode>(StmtNode{Seq{std::move(first), std::move(second)}}));
}
Statement Statement::if_then_else(BExp cond, Statement then_branch, Statement else_branch) {
  return Statement(std::make_shared<const StmtNode>(
      StmtNode{If{std::move(cond), std::move(then_branch), std::move(else_branch)}}));
}
Statement Statement::prob_choice(Statement left, Statement right) {
  return Statement(std::make_shared<const StmtNode>(StmtNode{Prob{std::move(left), std::move(right)}}));
}
Statement Statement::macro_ref(std::string name) {
  return Statement(std::make_shared<const StmtNode>(StmtNode{MacroRef{std::move(name)}}));
}

bool Statement::is_skip() const { return std::holds_alternative<Skip>(node().v); }

bool Statement::contains_macro_ref() const {
  return std::visit(Overloaded{
                        [](const Skip&) { return false; },
                        [](const Assign&) { return false; },
                        [](const Seq& s) { return s.first.contains_macro_ref() || s.second.contains_macro_ref(); },
                        [](const If& s) {
                          return s.then_branch.contains_macro_ref() || s.else_branch.contains_macro_ref();
                        },
                        [](const Prob& s) { return s.left.contains_macro_ref() || s.right.contains_macro_ref(); },
                        [](const MacroRef&) { return true; },
                    },
                    node().v);
}

bool operator==(const Statement& a, const Statement& b) {
  if (a.node_.get() == b.node_.get()) return true;
  return std::visit(
      Overloaded{
          [](const Skip&, const Skip&) { return true; },
          [](const Assign& x, const Assign& y) { return x.field == y.field && x.value == y.value; },
          [](const Seq& x, const Seq& y) { return x.first == y.first && x.second == y.second; },
          [](const If& x, const If& y) {
            return x.cond == y.cond && x.then_branch == y.then_branch && x.else_branch == y.else_branch;
          },
          [](const Prob& x, const Prob& y) { return x.left == y.left && x.right == y.right; },
          [](const MacroRef& x, const MacroRef& y) { return x.name == y.name; },
          [](const auto&, const auto&) { return false; },
      },
      a.node().v, b.node().v);
}

Statement seq_of(const std::vector<Statement>& stmts) {
  if (stmts.empty()) return Statement::skip();
  Statement out = stmts.back();
  for (auto it = stmts.rbegin() + 1; it != stmts.rend(); ++it) {
    out = Statement::seq(*it, out);
  }
  return out;
}

std::vector<Statement> seq_split(const Statement& s) {
  std::vector<Statement> out;
  const Statement* cur = &s;
  while (const auto* seq = std::get_if<Seq>(&cur->node().v)) {
    // flatten the left side too, so ((a;b);c) and (a;(b;c)) list identically
    auto left = seq_split(seq->first);
    out.insert(out.end(), left.begin(), left.end());
    cur = &seq->second;
  }
  out.push_back(*cur);
  return out;
}

// --- expansion ---------------------------------------------------------------

namespace {

Statement substitute(const Statement& s, const std::unordered_map<std::string, Statement>& env) {
  return std::visit(
      Overloaded{
          [&](const Skip&) { return s; },
          [&](const Assign&) { return s; },
          [&](const Seq& n) {
            return Statement::seq(substitute(n.first, env), substitute(n.second, env));
          },
          [&](const If& n) {
            return Statement::if_then_else(n.cond, substitute(n.then_branch, env),
                                           substitute(n.else_branch, env));
          },
          [&](const Prob& n) {
            return Statement::prob_choice(substitute(n.left, env), substitute(n.right, env));
          },
          [&](const MacroRef& n) {
            const auto it = env.find(n.name);
            if (it == env.end()) throw ExpandError("undefined macro reference: " + n.name);
            return it->second;
          },
      },
      s.node().v);
}

}  // namespace

Statement expand(const Statement& s, const Program& defs) {
  std::unordered_map<std::string, Statement> env;
  for (const auto& [name, body] : defs.definitions) {
    if (env.count(name)) throw ExpandError("duplicate definition: " + name);
    env.emplace(name, substitute(body, env));
  }
  return substitute(s, env);
}

Statement expand(const Program& p) {
  if (!p.main) throw ExpandError("program has no main statement");
  return expand(*p.main, p);
}

}  // namespace demonic
