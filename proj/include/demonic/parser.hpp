#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "demonic/syntax.hpp"

namespace demonic {

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line(line),
        column(column) {}

  int line;
  int column;
};

// Parses a .dem source: zero or more definitions "Name = <statement>"
// followed by an optional main statement. '#' starts a line comment.
// `external_names` lists macro names defined elsewhere (e.g. the prelude)
// that references may resolve to.
Program parse_program(std::string_view text, const std::vector<std::string>& external_names = {});

// Parses a bare statement (no definitions allowed).
Statement parse_statement(std::string_view text, const std::vector<std::string>& external_names = {});

}  // namespace demonic
