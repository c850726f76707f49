#include "demonic/dist.hpp"

#include <algorithm>
#include <sstream>

namespace demonic {

Dist Dist::merge(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Dist d;
  Rat total(0);
  for (auto& [state, p] : entries) {
    if (p < Rat(0)) throw DistError("negative probability in distribution");
    total += p;
    if (p == Rat(0)) continue;
    if (!d.entries_.empty() && d.entries_.back().first == state) {
      d.entries_.back().second += p;
    } else {
      d.entries_.emplace_back(state, p);
    }
  }
  if (total != Rat(1)) {
    throw DistError("distribution weights sum to " + to_string(total) + ", expected 1");
  }
  return d;
}

Dist Dist::point(const BoxState& s) { return merge({{s, Rat(1)}}); }

Rat mean_work(const Dist& d) {
  Rat out(0);
  for (const auto& [state, p] : d.entries()) out += p * Rat(state.work);
  return out;
}

Rat mean_x(const Dist& d) {
  Rat out(0);
  for (const auto& [state, p] : d.entries()) out += p * to_rational(state.x);
  return out;
}

Dist shift_work(const Dist& d, std::int64_t c) {
  std::vector<Dist::Entry> entries;
  entries.reserve(d.size());
  for (auto [state, p] : d.entries()) {
    state.work += c;
    entries.emplace_back(state, p);
  }
  return Dist::merge(std::move(entries));
}

std::string to_string(const Dist& d) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [state, p] : d.entries()) {
    if (!first) out << ", ";
    first = false;
    out << to_string(p) << ": " << to_string(state);
  }
  out << '}';
  return out.str();
}

}  // namespace demonic
