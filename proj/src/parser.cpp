#include "demonic/parser.hpp"

#include <cctype>
#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace demonic {

namespace {

enum class TokKind {
  ident,
  integer,
  semi,      // ;
  colon_eq,  // :=
  eq,        // =
  lparen,
  rparen,
  lbracket,
  rbracket,
  prob_op,  // (+)
  plus,
  minus,
  slash,
  dot,
  end,
};

struct Token {
  TokKind kind;
  std::string text;
  std::int64_t value = 0;
  int line = 1;
  int column = 1;
};

const std::set<std::string> kKeywords = {"skip", "if",  "then", "else", "true",
                                         "false", "not", "or",   "and"};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> lex() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      Token tok;
      tok.line = line_;
      tok.column = column_;
      if (pos_ >= text_.size()) {
        tok.kind = TokKind::end;
        out.push_back(tok);
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          tok.text += take();
        }
        tok.kind = TokKind::ident;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          digits += take();
        }
        tok.kind = TokKind::integer;
        tok.text = digits;
        tok.value = std::stoll(digits);
      } else if (c == '(' && pos_ + 2 < text_.size() && text_[pos_ + 1] == '+' && text_[pos_ + 2] == ')') {
        take();
        take();
        take();
        tok.kind = TokKind::prob_op;
        tok.text = "(+)";
      } else if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
        take();
        take();
        tok.kind = TokKind::colon_eq;
        tok.text = ":=";
      } else {
        take();
        tok.text = std::string(1, c);
        switch (c) {
          case ';': tok.kind = TokKind::semi; break;
          case '=': tok.kind = TokKind::eq; break;
          case '(': tok.kind = TokKind::lparen; break;
          case ')': tok.kind = TokKind::rparen; break;
          case '[': tok.kind = TokKind::lbracket; break;
          case ']': tok.kind = TokKind::rbracket; break;
          case '+': tok.kind = TokKind::plus; break;
          case '-': tok.kind = TokKind::minus; break;
          case '/': tok.kind = TokKind::slash; break;
          case '.': tok.kind = TokKind::dot; break;
          default:
            throw ParseError("unexpected character '" + std::string(1, c) + "'", tok.line, tok.column);
        }
      }
      out.push_back(std::move(tok));
    }
  }

 private:
  char take() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::string>& external_names)
      : tokens_(std::move(tokens)) {
    for (const auto& n : external_names) known_.insert(n);
  }

  Program program() {
    Program p;
    while (is_definition_start()) {
      const Token name_tok = advance();
      if (kKeywords.count(name_tok.text) || name_tok.text == "s" || name_tok.text == "w") {
        throw ParseError("reserved word cannot name a definition: " + name_tok.text, name_tok.line,
                         name_tok.column);
      }
      if (known_.count(name_tok.text)) {
        throw ParseError("duplicate definition: " + name_tok.text, name_tok.line, name_tok.column);
      }
      expect(TokKind::eq, "expected '='");
      Statement body = statement();
      known_.insert(name_tok.text);
      p.definitions.emplace_back(name_tok.text, std::move(body));
    }
    if (peek().kind != TokKind::end) {
      p.main = statement();
    }
    expect(TokKind::end, "unexpected trailing input");
    return p;
  }

  Statement bare_statement() {
    Statement s = statement();
    expect(TokKind::end, "unexpected trailing input");
    return s;
  }

 private:
  // --- token plumbing -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  Token advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  Token expect(TokKind kind, const std::string& msg) {
    if (peek().kind != kind) fail(msg);
    return advance();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    const std::string got = t.kind == TokKind::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + " (got " + got + ")", t.line, t.column);
  }

  bool at_ident(const char* text) const {
    return peek().kind == TokKind::ident && peek().text == text;
  }

  bool is_definition_start() const {
    return peek().kind == TokKind::ident && !kKeywords.count(peek().text) &&
           peek(1).kind == TokKind::eq;
  }

  // --- statements -----------------------------------------------------------

  Statement statement() {
    Statement first = and_group();
    if (peek().kind == TokKind::semi) {
      advance();
      return Statement::seq(std::move(first), statement());
    }
    return first;
  }

  // Simultaneous assignments joined by 'and'; desugared to a right-nested
  // sequence after checking that no field is assigned twice.
  Statement and_group() {
    Statement first = primary();
    if (!at_ident("and")) return first;

    std::vector<Statement> parts{first};
    std::vector<Field> fields;
    const Token start = peek();
    auto record = [&](const Statement& s) {
      const auto* assign = std::get_if<Assign>(&s.node().v);
      if (assign == nullptr) {
        throw ParseError("'and' may only join assignments", start.line, start.column);
      }
      for (Field f : fields) {
        if (f == assign->field) {
          throw ParseError("'and'-group assigns field " + to_string(assign->field) + " twice",
                           start.line, start.column);
        }
      }
      fields.push_back(assign->field);
    };
    record(first);
    while (at_ident("and")) {
      advance();
      Statement next = primary();
      record(next);
      parts.push_back(std::move(next));
    }
    return seq_of(parts);
  }

  Statement primary() {
    const Token& t = peek();
    if (t.kind == TokKind::ident) {
      if (t.text == "skip") {
        advance();
        return Statement::skip();
      }
      if (t.text == "if") {
        advance();
        BExp cond = bexp();
        if (!at_ident("then")) fail("expected 'then'");
        advance();
        Statement then_branch = statement();
        if (!at_ident("else")) fail("expected 'else'");
        advance();
        Statement else_branch = statement();
        return Statement::if_then_else(std::move(cond), std::move(then_branch), std::move(else_branch));
      }
      if (t.text == "s") {
        return assignment();
      }
      if (kKeywords.count(t.text)) fail("unexpected keyword '" + t.text + "'");
      if (t.text == "w") fail("'w' may only appear in work assignments");
      if (!known_.count(t.text)) {
        throw ParseError("undefined macro reference: " + t.text, t.line, t.column);
      }
      advance();
      return Statement::macro_ref(t.text);
    }
    if (t.kind == TokKind::lparen) {
      advance();
      Statement inner = statement();
      expect(TokKind::rparen, "expected ')'");
      return inner;
    }
    if (t.kind == TokKind::lbracket) {
      advance();
      Statement left = statement();
      expect(TokKind::rbracket, "expected ']'");
      expect(TokKind::prob_op, "expected '(+)' after bracketed statement");
      expect(TokKind::lbracket, "expected '[' after '(+)'");
      Statement right = statement();
      expect(TokKind::rbracket, "expected ']'");
      return Statement::prob_choice(std::move(left), std::move(right));
    }
    fail("expected a statement");
  }

  Field field_name() {
    expect(TokKind::dot, "expected '.' after 's'");
    const Token f = expect(TokKind::ident, "expected a field name");
    if (f.text == "X") return Field::x;
    if (f.text == "A") return Field::a;
    if (f.text == "I") return Field::i;
    if (f.text == "w") return Field::w;
    throw ParseError("unknown field name: " + f.text, f.line, f.column);
  }

  Statement assignment() {
    advance();  // 's'
    const Token at = peek();
    const Field field = field_name();
    expect(TokKind::colon_eq, "expected ':='");
    switch (field) {
      case Field::x: {
        const Token vt = peek();
        if (vt.kind != TokKind::integer) {
          throw ParseError("type mismatch: field X takes 0, 1/2 or 1", vt.line, vt.column);
        }
        return Statement::assign_x(x_literal());
      }
      case Field::a:
      case Field::i: {
        const bool value = bool_value("field " + to_string(field));
        return field == Field::a ? Statement::assign_partition(value) : Statement::assign_piston(value);
      }
      case Field::w: {
        return Statement::assign_work(work_value());
      }
    }
    throw ParseError("unknown field", at.line, at.column);
  }

  // true | false; integers 0/1 are normalised to booleans.
  bool bool_value(const std::string& what) {
    const Token t = peek();
    if (t.kind == TokKind::ident && (t.text == "true" || t.text == "false")) {
      advance();
      return t.text == "true";
    }
    if (t.kind == TokKind::integer && (t.value == 0 || t.value == 1)) {
      advance();
      return t.value == 1;
    }
    throw ParseError("type mismatch: " + what + " takes true or false", t.line, t.column);
  }

  ParticleProb x_literal() {
    const Token num = expect(TokKind::integer, "expected an X literal");
    std::int64_t n = num.value;
    std::int64_t d = 1;
    if (peek().kind == TokKind::slash) {
      advance();
      d = expect(TokKind::integer, "expected a denominator").value;
      if (d == 0) throw ParseError("zero denominator in X literal", num.line, num.column);
    }
    const auto p = particle_prob_from(Rat(n, d));
    if (!p) {
      throw ParseError("X literal must be 0, 1/2 or 1", num.line, num.column);
    }
    return *p;
  }

  WorkExpr work_value() {
    const Token t = peek();
    if (t.kind == TokKind::ident && t.text == "w") {
      advance();
      const Token sign = peek();
      std::int64_t mult = 0;
      if (sign.kind == TokKind::plus) {
        mult = 1;
      } else if (sign.kind == TokKind::minus) {
        mult = -1;
      } else {
        fail("expected '+' or '-' after 'w'");
      }
      advance();
      const Token amount = expect(TokKind::integer, "expected an integer offset");
      return WorkExpr{true, mult * amount.value};
    }
    if (t.kind == TokKind::minus) {
      advance();
      const Token amount = expect(TokKind::integer, "expected an integer");
      return WorkExpr{false, -amount.value};
    }
    if (t.kind == TokKind::integer) {
      advance();
      return WorkExpr{false, t.value};
    }
    throw ParseError("type mismatch: field w takes an integer or w +/- integer", t.line, t.column);
  }

  // --- guards ---------------------------------------------------------------

  BExp bexp() { return or_exp(); }

  BExp or_exp() {
    BExp lhs = and_exp();
    while (at_ident("or")) {
      advance();
      lhs = BExp::disjunction(std::move(lhs), and_exp());
    }
    return lhs;
  }

  BExp and_exp() {
    BExp lhs = not_exp();
    while (at_ident("and")) {
      advance();
      lhs = BExp::conjunction(std::move(lhs), not_exp());
    }
    return lhs;
  }

  BExp not_exp() {
    if (at_ident("not")) {
      advance();
      return BExp::negation(not_exp());
    }
    return guard_atom();
  }

  BExp guard_atom() {
    const Token& t = peek();
    if (t.kind == TokKind::ident) {
      if (t.text == "true" || t.text == "false") {
        advance();
        return BExp::lit(t.text == "true");
      }
      if (t.text == "s") {
        advance();
        const Token at = peek();
        const Field field = field_name();
        if (field == Field::w) {
          throw ParseError("the work counter cannot appear in guards", at.line, at.column);
        }
        if (field == Field::x) {
          expect(TokKind::eq, "expected '=' after s.X in a guard");
          return BExp::x_equals(x_literal());
        }
        BExp flag = field == Field::a ? BExp::partition_flag() : BExp::piston_flag();
        // 's.A = true' and 's.A = false' sugar.
        if (peek().kind == TokKind::eq) {
          advance();
          const bool v = bool_value("field " + to_string(field) + " comparison");
          return v ? flag : BExp::negation(std::move(flag));
        }
        return flag;
      }
    }
    if (t.kind == TokKind::lparen) {
      advance();
      BExp inner = bexp();
      expect(TokKind::rparen, "expected ')'");
      return inner;
    }
    fail("expected a guard expression");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<std::string> known_;
};

}  // namespace

Program parse_program(std::string_view text, const std::vector<std::string>& external_names) {
  Parser parser(Lexer(text).lex(), external_names);
  return parser.program();
}

Statement parse_statement(std::string_view text, const std::vector<std::string>& external_names) {
  Parser parser(Lexer(text).lex(), external_names);
  return parser.bare_statement();
}

}  // namespace demonic
