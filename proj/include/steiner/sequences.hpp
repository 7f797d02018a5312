#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steiner/angles.hpp"

namespace steiner {

enum class SequenceKind {
  van_der_corput,
  golden_rotation,
  uniform_random,
  fixed_cycle,
};

/// A deterministic rule n -> direction angle. Every kind is a pure
/// function of (kind, parameters, n); the random kind derives angle n
/// from the seed and n alone, so any index is computable directly.
/// Non-dyadic rules (golden, random) are quantized to 32 fractional bits
/// of a turn, keeping all downstream angle arithmetic exact.
class DirectionSequence {
 public:
  static DirectionSequence van_der_corput();
  static DirectionSequence golden_rotation();
  static DirectionSequence uniform_random(std::uint64_t seed);
  static DirectionSequence fixed_cycle(std::vector<DyadicAngle> angles);

  /// "vdc" | "golden" | "random" | "fixed:p/q,p/q,..." (turn fractions,
  /// power-of-two denominators). The seed applies to "random".
  static DirectionSequence parse(const std::string& text, std::uint64_t seed);

  DyadicAngle angle(std::uint64_t n) const;

  SequenceKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  DirectionSequence(SequenceKind kind, std::string name)
      : kind_(kind), name_(std::move(name)) {}

  SequenceKind kind_;
  std::string name_;
  std::uint64_t seed_ = 0;
  std::vector<DyadicAngle> cycle_;
};

}  // namespace steiner
