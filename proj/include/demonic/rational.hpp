#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace demonic {

// Exact probabilities and work averages. Every probability produced by the
// semantics is dyadic, so 64-bit components have ample headroom.
using Rat = boost::rational<std::int64_t>;

inline double to_double(const Rat& r) { return boost::rational_cast<double>(r); }

// "3", "-3", "1/2"; the denominator is omitted when it is 1.
std::string to_string(const Rat& r);

std::optional<Rat> rat_from_string(const std::string& text);

struct RatHash {
  std::size_t operator()(const Rat& r) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(r.numerator());
    return h ^ (std::hash<std::int64_t>{}(r.denominator()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  }
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace demonic
