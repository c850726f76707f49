#include "demonic/rational.hpp"

#include <cstdlib>

namespace demonic {

std::string to_string(const Rat& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    out += '/';
    out += std::to_string(r.denominator());
  }
  return out;
}

std::optional<Rat> rat_from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  char* end = nullptr;
  errno = 0;
  const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
  const long long num = std::strtoll(num_part.c_str(), &end, 10);
  if (errno != 0 || end == num_part.c_str() || *end != '\0') return std::nullopt;
  long long den = 1;
  if (slash != std::string::npos) {
    const std::string den_part = text.substr(slash + 1);
    den = std::strtoll(den_part.c_str(), &end, 10);
    if (errno != 0 || end == den_part.c_str() || *end != '\0' || den == 0) return std::nullopt;
  }
  return Rat(num, den);
}

}  // namespace demonic
