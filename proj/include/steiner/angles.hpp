#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

/// An exact direction on the circle: the angle 2*pi * numerator / 2^exponent.
///
/// The stored fraction is a fraction of a full turn, normalized to [0, 1)
/// and reduced so the numerator is odd or zero. Equality of angles is then
/// plain integer equality of the (numerator, exponent) pair. Conversion to
/// floating-point radians happens in radians() only; everything else is
/// integer arithmetic.
struct DyadicAngle {
  std::uint64_t numerator = 0;
  unsigned exponent = 0;

  /// Normalizes num/2^exp modulo one turn and strips common factors of two.
  static DyadicAngle from_fraction(std::uint64_t num, unsigned exp);

  /// Turn fraction as a double (exact for exponent <= 52).
  double turns() const {
    return static_cast<double>(numerator) / exp2_double(exponent);
  }

  /// Angle in radians: one multiplication of the reduced turn fraction.
  double radians() const;

  /// The angle -theta modulo a full turn.
  DyadicAngle negated() const;

  /// True for multiples of a quarter turn (0, 1/4, 1/2, 3/4).
  bool quarter_multiple() const { return exponent <= 2; }

  /// Which quarter-turn multiple: 0, 1, 2 or 3. Only valid when
  /// quarter_multiple() holds.
  int quarter_index() const {
    return static_cast<int>(numerator << (2 - exponent));
  }

  Rational turn_rational() const;

  /// "p/2^k" rendered with a decimal denominator, e.g. "1/4", "3/8", "0/1".
  std::string str() const;

  bool operator==(const DyadicAngle&) const = default;

 private:
  static double exp2_double(unsigned e);
};

/// Parses a turn fraction of the form "p/q" (q a power of two) or a bare
/// integer; the value is reduced modulo one turn. Throws on anything else.
DyadicAngle parse_turn_fraction(const std::string& text);

/// A signed exact fraction of a turn in (-1/2, 1/2], reduced so the
/// numerator is odd or zero. Houses angle increments.
struct TurnFraction {
  long long num = 0;
  unsigned exponent = 0;

  /// Reduces num/2^exp modulo one turn into (-1/2, 1/2].
  static TurnFraction from_fraction(long long num, unsigned exp);

  double turns() const;
  Rational turn_rational() const;

  /// The same fraction reduced into [0, 1), as a rotation angle.
  DyadicAngle as_angle() const;

  /// "+p/2^k" / "-p/2^k" with a decimal denominator.
  std::string str() const;

  bool operator==(const TurnFraction&) const = default;
};

/// n-th element of the van der Corput sequence on the circle: the turn
/// fraction is the bit reversal of n's binary digits placed after the
/// radix point. Exact; vdc_angle(0) is the zero angle.
DyadicAngle vdc_angle(std::uint64_t n);

/// Consecutive difference vdc_angle(n) - vdc_angle(n-1), reduced into
/// (-1/2, 1/2] turns. Rejects n = 0.
TurnFraction gap(std::uint64_t n);

/// A circular arc running counterclockwise from lo to hi, with each
/// endpoint either included or not. lo == hi degenerates to the single
/// point (closed/closed), its complement (open/open), or the full circle
/// (mixed).
struct Arc {
  DyadicAngle lo;
  DyadicAngle hi;
  bool lo_closed = true;
  bool hi_closed = true;

  std::string str() const;
};

/// Exact circle discrepancy of a point multiset together with an arc that
/// attains it.
struct DiscrepancyResult {
  Rational value;       // in [0, 1]
  Arc witness_arc;      // evaluating arc_discrepancy here reproduces value
  std::size_t n_points = 0;
};

/// |count(points in arc)/N - length(arc)/turn| as an exact rational.
Rational arc_discrepancy(std::span<const DyadicAngle> points, const Arc& arc);

/// Exact supremum over all circular arcs of the deviation between the
/// empirical point fraction and the normalized arc length. The supremum is
/// attained on arcs with endpoints in the point set; all O(N^2) endpoint
/// pairs are enumerated with the four open/closed endpoint combinations,
/// plus the full circle and the empty arc.
DiscrepancyResult discrepancy(std::span<const DyadicAngle> points);

}  // namespace steiner
