#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "demonic/rational.hpp"

namespace demonic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Probability that the particle occupies the left half of the box.
// Only the three lattice values are representable.
enum class ParticleProb : std::uint8_t { zero = 0, half = 1, one = 2 };

Rat to_rational(ParticleProb p);
std::optional<ParticleProb> particle_prob_from(const Rat& r);
std::string to_string(ParticleProb p);

// Full state of the box: particle-position probability, partition flag,
// piston flag, and the work counter in units of kT ln2.
struct BoxState {
  ParticleProb x = ParticleProb::half;
  bool partition = false;
  bool piston = false;
  std::int64_t work = 0;

  friend auto operator<=>(const BoxState&, const BoxState&) = default;
};

// Canonical rendering "(1/2, F, F, 0)"; also the wire format used by the
// CLI, golden files and JSON reports.
std::string to_string(const BoxState& s);

// Parses the canonical rendering; throws Error on malformed input.
BoxState parse_box_state(const std::string& text);

struct BoxStateHash {
  std::size_t operator()(const BoxState& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.x);
    h = hash_combine(h, s.partition ? 2u : 3u);
    h = hash_combine(h, s.piston ? 5u : 7u);
    h = hash_combine(h, std::hash<std::int64_t>{}(s.work));
    return h;
  }
};

}  // namespace demonic
