#pragma once

#include <string>

#include "demonic/syntax.hpp"

namespace demonic {

// Canonical concrete syntax. parse(pretty(x)) reproduces x structurally;
// note that 'and'-groups were already desugared to ';' at parse time, so
// they print as sequences.
std::string pretty(const BExp& b);
std::string pretty(const Statement& s);
std::string pretty(const Program& p);

}  // namespace demonic
