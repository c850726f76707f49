#include "demonic/state.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace demonic {

Rat to_rational(ParticleProb p) {
  switch (p) {
    case ParticleProb::zero: return Rat(0);
    case ParticleProb::half: return Rat(1, 2);
    case ParticleProb::one: return Rat(1);
  }
  throw Error("invalid ParticleProb");
}

std::optional<ParticleProb> particle_prob_from(const Rat& r) {
  if (r == Rat(0)) return ParticleProb::zero;
  if (r == Rat(1, 2)) return ParticleProb::half;
  if (r == Rat(1)) return ParticleProb::one;
  return std::nullopt;
}

std::string to_string(ParticleProb p) {
  switch (p) {
    case ParticleProb::zero: return "0";
    case ParticleProb::half: return "1/2";
    case ParticleProb::one: return "1";
  }
  throw Error("invalid ParticleProb");
}

std::string to_string(const BoxState& s) {
  std::ostringstream out;
  out << '(' << to_string(s.x) << ", " << (s.partition ? 'T' : 'F') << ", " << (s.piston ? 'T' : 'F')
      << ", " << s.work << ')';
  return out.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& text) {
  std::size_t begin = text.find('(');
  std::size_t end = text.rfind(')');
  if (begin == std::string::npos || end == std::string::npos || end <= begin) {
    throw Error("malformed state literal: " + text);
  }
  std::vector<std::string> fields;
  std::string current;
  for (std::size_t i = begin + 1; i < end; ++i) {
    const char c = text[i];
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

bool parse_flag(const std::string& f, const std::string& original) {
  if (f == "T" || f == "true") return true;
  if (f == "F" || f == "false") return false;
  throw Error("malformed state literal (expected T or F): " + original);
}

}  // namespace

BoxState parse_box_state(const std::string& text) {
  const auto fields = split_fields(text);
  if (fields.size() != 4) throw Error("malformed state literal (expected four fields): " + text);

  const auto x_rat = rat_from_string(fields[0]);
  if (!x_rat) throw Error("malformed state literal (bad X): " + text);
  const auto x = particle_prob_from(*x_rat);
  if (!x) throw Error("X must be one of 0, 1/2, 1: " + text);

  BoxState s;
  s.x = *x;
  s.partition = parse_flag(fields[1], text);
  s.piston = parse_flag(fields[2], text);

  char* end = nullptr;
  errno = 0;
  s.work = std::strtoll(fields[3].c_str(), &end, 10);
  if (errno != 0 || end == fields[3].c_str() || *end != '\0') {
    throw Error("malformed state literal (bad work counter): " + text);
  }
  return s;
}

}  // namespace demonic
