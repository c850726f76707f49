#include "demonic/oplib.hpp"

#include <variant>

#include "demonic/parser.hpp"
#include "demonic/semantics.hpp"

namespace demonic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using PP = ParticleProb;

Statement part_in() { return Statement::assign_partition(true); }

Statement part_out() {
  // if (s.A = true) then (if (s.I = false) then (s.X := 1/2 and s.A := false)
  //                       else (s.A := false)) else skip
  return Statement::if_then_else(
      BExp::partition_flag(),
      Statement::if_then_else(
          BExp::negation(BExp::piston_flag()),
          Statement::seq(Statement::assign_x(PP::half), Statement::assign_partition(false)),
          Statement::assign_partition(false)),
      Statement::skip());
}

// Shared shape of the piston-removal operations: `kept` is the side the
// particle must occupy for the piston to be pushed out.
Statement pist_out(PP kept) {
  return Statement::if_then_else(
      BExp::disjunction(BExp::negation(BExp::piston_flag()), BExp::negation(BExp::x_equals(kept))),
      Statement::skip(),
      Statement::if_then_else(
          BExp::partition_flag(), Statement::assign_piston(false),
          seq_of({Statement::assign_piston(false), Statement::assign_x(PP::half),
                  Statement::assign_work(WorkExpr{true, 1})})));
}

// Piston insertion; `blocked` is the side whose occupation makes the
// insertion an unphysical zero-volume compression (failure cost), `swept`
// the side the particle is pushed to by a successful compression.
Statement pist_in(PP blocked, PP swept, std::int64_t failure_cost) {
  return Statement::if_then_else(
      BExp::x_equals(blocked), Statement::assign_work(WorkExpr{true, -failure_cost}),
      Statement::if_then_else(
          BExp::x_equals(swept), Statement::assign_piston(true),
          Statement::if_then_else(
              BExp::negation(BExp::partition_flag()),
              seq_of({Statement::assign_x(swept), Statement::assign_work(WorkExpr{true, -1}),
                      Statement::assign_piston(true)}),
              Statement::prob_choice(
                  Statement::seq(Statement::assign_x(swept), Statement::assign_piston(true)),
                  Statement::seq(Statement::assign_x(blocked),
                                 Statement::assign_work(WorkExpr{true, -failure_cost}))))));
}

Statement nreset_full() {
  const Statement to_left = Statement::seq(Statement::assign_x(PP::one), Statement::assign_partition(true));
  return Statement::if_then_else(
      BExp::x_equals(PP::zero), to_left,
      Statement::if_then_else(
          BExp::x_equals(PP::one), Statement::skip(),
          Statement::if_then_else(BExp::x_equals(PP::half), to_left, Statement::skip())));
}

}  // namespace

std::string_view to_string(OpName name) {
  switch (name) {
    case OpName::part_in: return "PartIn";
    case OpName::part_out: return "PartOut";
    case OpName::lpist_in: return "LPistIn";
    case OpName::rpist_in: return "RPistIn";
    case OpName::lpist_out: return "LPistOut";
    case OpName::rpist_out: return "RPistOut";
    case OpName::cycle: return "Cycle";
    case OpName::shift: return "Shift";
    case OpName::shift_mirror: return "ShiftMirror";
    case OpName::nreset: return "NReset";
  }
  throw Error("invalid OpName");
}

std::optional<OpName> op_from_string(std::string_view name) {
  for (const OpName op : {OpName::part_in, OpName::part_out, OpName::lpist_in, OpName::rpist_in,
                          OpName::lpist_out, OpName::rpist_out, OpName::cycle, OpName::shift,
                          OpName::shift_mirror, OpName::nreset}) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

const std::vector<OpName>& basic_ops() {
  // Lexicographic by name; the synthesis search relies on this order for
  // deterministic witnesses.
  static const std::vector<OpName> ops = {OpName::lpist_in,  OpName::lpist_out, OpName::part_in,
                                          OpName::part_out,  OpName::rpist_in,  OpName::rpist_out};
  return ops;
}

Statement basic_op(OpName name, PistonParams params) {
  if (params.failure_cost < 0) throw Error("failure cost must be non-negative");
  switch (name) {
    case OpName::part_in: return part_in();
    case OpName::part_out: return part_out();
    case OpName::lpist_in: return pist_in(PP::one, PP::zero, params.failure_cost);
    case OpName::rpist_in: return pist_in(PP::zero, PP::one, params.failure_cost);
    case OpName::lpist_out: return pist_out(PP::zero);
    case OpName::rpist_out: return pist_out(PP::one);
    case OpName::cycle:
      return seq_of({basic_op(OpName::part_in, params), basic_op(OpName::lpist_in, params),
                     basic_op(OpName::part_out, params), basic_op(OpName::lpist_out, params)});
    case OpName::shift:
      return seq_of({basic_op(OpName::rpist_in, params), basic_op(OpName::part_out, params),
                     basic_op(OpName::rpist_out, params), basic_op(OpName::lpist_in, params),
                     basic_op(OpName::part_in, params), basic_op(OpName::lpist_out, params)});
    case OpName::shift_mirror: return mirror_statement(basic_op(OpName::shift, params));
    case OpName::nreset: return nreset_full();
  }
  throw Error("invalid OpName");
}

Statement nreset_reduced() {
  return Statement::seq(Statement::assign_x(PP::one), Statement::assign_partition(true));
}

namespace {

PP mirror(PP p) {
  switch (p) {
    case PP::zero: return PP::one;
    case PP::half: return PP::half;
    case PP::one: return PP::zero;
  }
  throw Error("invalid ParticleProb");
}

BExp mirror_bexp(const BExp& b) {
  return std::visit(Overloaded{
                        [&](const BoolLit&) { return b; },
                        [&](const PartitionFlag&) { return b; },
                        [&](const PistonFlag&) { return b; },
                        [](const XEquals& n) { return BExp::x_equals(mirror(n.value)); },
                        [](const Negation& n) { return BExp::negation(mirror_bexp(n.operand)); },
                        [](const Disjunction& n) {
                          return BExp::disjunction(mirror_bexp(n.lhs), mirror_bexp(n.rhs));
                        },
                        [](const Conjunction& n) {
                          return BExp::conjunction(mirror_bexp(n.lhs), mirror_bexp(n.rhs));
                        },
                    },
                    b.node().v);
}

}  // namespace

Statement mirror_statement(const Statement& s) {
  return std::visit(
      Overloaded{
          [&](const Skip&) { return s; },
          [&](const Assign& n) {
            if (n.field == Field::x) return Statement::assign_x(mirror(std::get<PP>(n.value)));
            return s;
          },
          [](const Seq& n) {
            return Statement::seq(mirror_statement(n.first), mirror_statement(n.second));
          },
          [](const If& n) {
            return Statement::if_then_else(mirror_bexp(n.cond), mirror_statement(n.then_branch),
                                           mirror_statement(n.else_branch));
          },
          [](const Prob& n) {
            return Statement::prob_choice(mirror_statement(n.left), mirror_statement(n.right));
          },
          [&](const MacroRef&) { return s; },
      },
      s.node().v);
}

WcDerivation derive_wc(std::int64_t max_candidate) {
  if (max_candidate < 1) throw Error("derive_wc: max_candidate must be >= 1");
  const BoxState start{PP::half, false, false, 0};
  WcDerivation out;
  bool found = false;
  for (std::int64_t wc = 0; wc <= max_candidate; ++wc) {
    const Rat mean = mean_work(run(basic_op(OpName::cycle, PistonParams{wc}), start));
    out.table.emplace_back(wc, mean);
    if (!found && mean <= Rat(0)) {
      out.wc = wc;
      found = true;
    }
  }
  if (!found) {
    throw SearchExhausted("no failure cost up to " + std::to_string(max_candidate) +
                          " preserves the second law");
  }
  return out;
}

std::string_view prelude_text() {
  // Kept byte-identical with share/prelude.dem (tested).
  static constexpr std::string_view text = R"(# DEMONIC prelude: the basic single-particle operations and the named
# compositions discussed alongside them. Work is counted in units of kT ln2;
# the piston failure cost is fixed at one unit.

PartIn = s.A := true

PartOut = if (s.A = true)
          then (if (s.I = false)
                then (s.X := 1/2) and (s.A := false)
                else (s.A := false))
          else (skip)

LPistIn = if (s.X = 1)
          then (s.w := w - 1)
          else (if (s.X = 0)
                then (s.I := true)
                else (if (s.A = false)
                      then (s.X := 0) and (s.w := w - 1) and (s.I := true)
                      else ([(s.X := 0) and (s.I := true)] (+) [(s.X := 1) and (s.w := w - 1)])))

RPistIn = if (s.X = 0)
          then (s.w := w - 1)
          else (if (s.X = 1)
                then (s.I := true)
                else (if (s.A = false)
                      then (s.X := 1) and (s.w := w - 1) and (s.I := true)
                      else ([(s.X := 1) and (s.I := true)] (+) [(s.X := 0) and (s.w := w - 1)])))

LPistOut = if (s.I = false) or not (s.X = 0)
           then (skip)
           else (if (s.A = true)
                 then (s.I := false)
                 else (s.I := false) and (s.X := 1/2) and (s.w := w + 1))

RPistOut = if (s.I = false) or not (s.X = 1)
           then (skip)
           else (if (s.A = true)
                 then (s.I := false)
                 else (s.I := false) and (s.X := 1/2) and (s.w := w + 1))

Cycle = PartIn ; LPistIn ; PartOut ; LPistOut

Shift = RPistIn ; PartOut ; RPistOut ; LPistIn ; PartIn ; LPistOut

ShiftMirror = LPistIn ; PartOut ; LPistOut ; RPistIn ; PartIn ; RPistOut

NReset = if (s.X = 0)
         then (s.X := 1) and (s.A := 1)
         else (if (s.X = 1)
               then (skip)
               else (if (s.X = 1/2)
                     then (s.X := 1) and (s.A := 1)
                     else (skip)))
)";
  return text;
}

const Program& prelude() {
  static const Program program = parse_program(prelude_text());
  return program;
}

std::vector<std::string> prelude_names() {
  std::vector<std::string> names;
  names.reserve(prelude().definitions.size());
  for (const auto& [name, body] : prelude().definitions) names.push_back(name);
  return names;
}

}  // namespace demonic
