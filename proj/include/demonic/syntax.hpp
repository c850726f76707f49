#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "demonic/state.hpp"

namespace demonic {

// ---------------------------------------------------------------------------
// Boolean guard expressions
// ---------------------------------------------------------------------------

struct BExpNode;

class BExp {
 public:
  static BExp lit(bool value);
  static BExp partition_flag();  // s.A
  static BExp piston_flag();     // s.I
  static BExp x_equals(ParticleProb value);
  static BExp negation(BExp operand);
  static BExp disjunction(BExp lhs, BExp rhs);
  static BExp conjunction(BExp lhs, BExp rhs);

  const BExpNode& node() const { return *node_; }

  friend bool operator==(const BExp& a, const BExp& b);
  friend bool operator!=(const BExp& a, const BExp& b) { return !(a == b); }

 private:
  explicit BExp(std::shared_ptr<const BExpNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const BExpNode> node_;
};

struct BoolLit {
  bool value;
};
struct PartitionFlag {};
struct PistonFlag {};
struct XEquals {
  ParticleProb value;
};
struct Negation {
  BExp operand;
};
struct Disjunction {
  BExp lhs, rhs;
};
struct Conjunction {
  BExp lhs, rhs;
};

struct BExpNode {
  std::variant<BoolLit, PartitionFlag, PistonFlag, XEquals, Negation, Disjunction, Conjunction> v;
};

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

enum class Field : std::uint8_t { x, a, i, w };

std::string to_string(Field f);

// Value assigned to the work counter: either "w + amount" (relative) or a
// bare integer literal.
struct WorkExpr {
  bool relative = true;
  std::int64_t amount = 0;

  friend bool operator==(const WorkExpr&, const WorkExpr&) = default;
};

// Typed by construction: the variant alternative always matches the field.
using AssignValue = std::variant<ParticleProb, bool, WorkExpr>;

struct StmtNode;

class Statement {
 public:
  static Statement skip();
  static Statement assign_x(ParticleProb value);
  static Statement assign_partition(bool value);
  static Statement assign_piston(bool value);
  static Statement assign_work(WorkExpr value);
  static Statement seq(Statement first, Statement second);
  static Statement if_then_else(BExp cond, Statement then_branch, Statement else_branch);
  static Statement prob_choice(Statement left, Statement right);
  static Statement macro_ref(std::string name);

  const StmtNode& node() const { return *node_; }
  // Stable identity of the underlying node; used for memoisation.
  const void* id() const { return node_.get(); }

  bool is_skip() const;
  bool contains_macro_ref() const;

  friend bool operator==(const Statement& a, const Statement& b);
  friend bool operator!=(const Statement& a, const Statement& b) { return !(a == b); }

 private:
  explicit Statement(std::shared_ptr<const StmtNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const StmtNode> node_;
};

struct Skip {};
struct Assign {
  Field field;
  AssignValue value;
};
struct Seq {
  Statement first, second;
};
struct If {
  BExp cond;
  Statement then_branch, else_branch;
};
struct Prob {
  Statement left, right;
};
struct MacroRef {
  std::string name;
};

struct StmtNode {
  std::variant<Skip, Assign, Seq, If, Prob, MacroRef> v;
};

// Folds a list of statements into a right-nested Seq; an empty list is skip.
Statement seq_of(const std::vector<Statement>& stmts);

// Splits the top-level Seq spine back into a flat list (inverse of seq_of
// up to associativity).
std::vector<Statement> seq_split(const Statement& s);

// ---------------------------------------------------------------------------
// Programs: named macro definitions plus an optional main statement
// ---------------------------------------------------------------------------

struct Program {
  std::vector<std::pair<std::string, Statement>> definitions;
  std::optional<Statement> main;

  friend bool operator==(const Program&, const Program&) = default;
};

struct ExpandError : Error {
  using Error::Error;
};

// Inlines every macro reference; throws ExpandError if main is missing or a
// reference is undefined. Definitions may only reference earlier definitions.
Statement expand(const Program& p);

// Expands a single statement against a program's definitions.
Statement expand(const Statement& s, const Program& defs);

}  // namespace demonic
