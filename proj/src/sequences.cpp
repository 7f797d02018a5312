#include "steiner/sequences.hpp"

#include <sstream>
#include <stdexcept>

namespace steiner {

namespace {

// Fibonacci-hash step: round(2^32 / golden ratio), odd, so successive
// multiples are exact integers mod 2^32.
constexpr std::uint64_t kGoldenStep = 2654435769u;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

DirectionSequence DirectionSequence::van_der_corput() {
  return DirectionSequence(SequenceKind::van_der_corput, "vdc");
}

DirectionSequence DirectionSequence::golden_rotation() {
  return DirectionSequence(SequenceKind::golden_rotation, "golden");
}

DirectionSequence DirectionSequence::uniform_random(std::uint64_t seed) {
  DirectionSequence s(SequenceKind::uniform_random,
                      "random(seed=" + std::to_string(seed) + ")");
  s.seed_ = seed;
  return s;
}

DirectionSequence DirectionSequence::fixed_cycle(
    std::vector<DyadicAngle> angles) {
  if (angles.empty())
    throw std::invalid_argument("fixed_cycle: empty angle list");
  std::string name = "fixed:";
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (i > 0) name += ",";
    name += angles[i].str();
  }
  DirectionSequence s(SequenceKind::fixed_cycle, name);
  s.cycle_ = std::move(angles);
  return s;
}

DirectionSequence DirectionSequence::parse(const std::string& text,
                                           std::uint64_t seed) {
  if (text == "vdc") return van_der_corput();
  if (text == "golden") return golden_rotation();
  if (text == "random") return uniform_random(seed);
  if (text.rfind("fixed:", 0) == 0) {
    std::vector<DyadicAngle> angles;
    std::stringstream ss(text.substr(6));
    std::string item;
    while (std::getline(ss, item, ','))
      angles.push_back(parse_turn_fraction(item));
    return fixed_cycle(std::move(angles));
  }
  throw std::invalid_argument(
      "unknown sequence '" + text +
      "' (expected vdc, golden, random or fixed:p/q,...)");
}

DyadicAngle DirectionSequence::angle(std::uint64_t n) const {
  switch (kind_) {
    case SequenceKind::van_der_corput:
      return vdc_angle(n);
    case SequenceKind::golden_rotation:
      return DyadicAngle::from_fraction((n * kGoldenStep) & 0xFFFFFFFFull, 32);
    case SequenceKind::uniform_random:
      return DyadicAngle::from_fraction(splitmix64(seed_ ^ n) >> 32, 32);
    case SequenceKind::fixed_cycle:
      return cycle_[n % cycle_.size()];
  }
  throw std::logic_error("DirectionSequence: bad kind");
}

}  // namespace steiner
