#include "steiner/angles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steiner {

namespace {

constexpr unsigned kMaxExponent = 62;  // keeps every shift inside 64 bits

std::uint64_t pow2(unsigned e) { return std::uint64_t(1) << e; }

}  // namespace

double DyadicAngle::exp2_double(unsigned e) {
  return std::ldexp(1.0, static_cast<int>(e));
}

DyadicAngle DyadicAngle::from_fraction(std::uint64_t num, unsigned exp) {
  if (exp > kMaxExponent)
    throw std::invalid_argument("DyadicAngle: exponent too large");
  num &= pow2(exp) - 1;  // modulo one turn
  while (num != 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (num == 0) exp = 0;
  return DyadicAngle{num, exp};
}

double DyadicAngle::radians() const {
  return turns() * (2.0 * std::numbers::pi);
}

DyadicAngle DyadicAngle::negated() const {
  if (numerator == 0) return DyadicAngle{};
  return DyadicAngle{pow2(exponent) - numerator, exponent};
}

Rational DyadicAngle::turn_rational() const {
  return Rational(static_cast<long long>(numerator),
                  static_cast<long long>(pow2(exponent)));
}

std::string DyadicAngle::str() const {
  return std::to_string(numerator) + "/" + std::to_string(pow2(exponent));
}

DyadicAngle parse_turn_fraction(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      unsigned long long p = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      (void)p;  // any whole number of turns is the zero angle
      return DyadicAngle{};
    }
    std::size_t used = 0;
    unsigned long long p = std::stoull(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    unsigned long long q = std::stoull(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1) throw std::invalid_argument(text);
    if (q == 0 || !std::has_single_bit(q))
      throw std::invalid_argument(text);
    unsigned exp = static_cast<unsigned>(std::countr_zero(q));
    return DyadicAngle::from_fraction(p, exp);
  } catch (const std::exception&) {
    throw std::invalid_argument(
        "expected a turn fraction p/q with q a power of two, got '" + text +
        "'");
  }
}

TurnFraction TurnFraction::from_fraction(long long num, unsigned exp) {
  if (exp > kMaxExponent)
    throw std::invalid_argument("TurnFraction: exponent too large");
  const long long den = static_cast<long long>(pow2(exp));
  num %= den;
  if (num < 0) num += den;
  if (num > den / 2) num -= den;  // into (-1/2, 1/2] turns
  while (num != 0 && num % 2 == 0) {
    num /= 2;
    --exp;
  }
  if (num == 0) exp = 0;
  return TurnFraction{num, exp};
}

double TurnFraction::turns() const {
  return static_cast<double>(num) / std::ldexp(1.0, static_cast<int>(exponent));
}

Rational TurnFraction::turn_rational() const {
  return Rational(num, static_cast<long long>(pow2(exponent)));
}

DyadicAngle TurnFraction::as_angle() const {
  if (num >= 0)
    return DyadicAngle::from_fraction(static_cast<std::uint64_t>(num),
                                      exponent);
  const long long den = static_cast<long long>(pow2(exponent));
  return DyadicAngle::from_fraction(static_cast<std::uint64_t>(den + num),
                                    exponent);
}

std::string TurnFraction::str() const {
  std::string s = num < 0 ? "-" : "+";
  long long a = num < 0 ? -num : num;
  return s + std::to_string(a) + "/" + std::to_string(pow2(exponent));
}

DyadicAngle vdc_angle(std::uint64_t n) {
  const unsigned width = static_cast<unsigned>(std::bit_width(n));
  if (width > kMaxExponent)
    throw std::invalid_argument("vdc_angle: index too large");
  std::uint64_t rev = 0;
  for (unsigned b = 0; b < width; ++b)
    if ((n >> b) & 1) rev |= std::uint64_t(1) << (width - 1 - b);
  return DyadicAngle::from_fraction(rev, width);
}

TurnFraction gap(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("gap: n must be >= 1, theta_0 has no predecessor");
  const DyadicAngle a = vdc_angle(n);
  const DyadicAngle b = vdc_angle(n - 1);
  const unsigned k = std::max(a.exponent, b.exponent);
  const long long pa =
      static_cast<long long>(a.numerator << (k - a.exponent));
  const long long pb =
      static_cast<long long>(b.numerator << (k - b.exponent));
  return TurnFraction::from_fraction(pa - pb, k);
}

std::string Arc::str() const {
  std::string s = lo_closed ? "[" : "(";
  s += lo.str() + ", " + hi.str();
  s += hi_closed ? "]" : ")";
  return s;
}

namespace {

struct ScaledArc {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool lo_closed = true;
  bool hi_closed = true;
};

bool arc_contains(const ScaledArc& a, std::uint64_t q) {
  if (a.lo == a.hi) {
    if (a.lo_closed && a.hi_closed) return q == a.lo;   // single point
    if (!a.lo_closed && !a.hi_closed) return q != a.lo; // its complement
    return true;                                        // full circle
  }
  if (q == a.lo) return a.lo_closed;
  if (q == a.hi) return a.hi_closed;
  if (a.lo < a.hi) return q > a.lo && q < a.hi;
  return q > a.lo || q < a.hi;  // wraps through zero
}

// Arc length as a multiple of 1/2^k turns.
std::uint64_t arc_length(const ScaledArc& a, unsigned k) {
  if (a.lo == a.hi) {
    if (a.lo_closed && a.hi_closed) return 0;
    return pow2(k);
  }
  if (a.lo < a.hi) return a.hi - a.lo;
  return pow2(k) - a.lo + a.hi;
}

unsigned common_exponent(std::span<const DyadicAngle> points) {
  unsigned k = 0;
  for (const DyadicAngle& p : points) k = std::max(k, p.exponent);
  return k;
}

std::uint64_t scale_to(const DyadicAngle& p, unsigned k) {
  return p.numerator << (k - p.exponent);
}

}  // namespace

Rational arc_discrepancy(std::span<const DyadicAngle> points, const Arc& arc) {
  if (points.empty())
    throw std::invalid_argument("arc_discrepancy: empty point list");
  unsigned k = common_exponent(points);
  k = std::max({k, arc.lo.exponent, arc.hi.exponent});
  const ScaledArc sa{scale_to(arc.lo, k), scale_to(arc.hi, k), arc.lo_closed,
                     arc.hi_closed};
  long long count = 0;
  for (const DyadicAngle& p : points)
    if (arc_contains(sa, scale_to(p, k))) ++count;
  const long long n = static_cast<long long>(points.size());
  const Rational dev =
      Rational(count, n) -
      Rational(static_cast<long long>(arc_length(sa, k)),
               static_cast<long long>(pow2(k)));
  return dev.abs();
}

DiscrepancyResult discrepancy(std::span<const DyadicAngle> points) {
  if (points.empty())
    throw std::invalid_argument("discrepancy: empty point list");
  const std::uint64_t n = points.size();
  const unsigned k = common_exponent(points);
  if (k + std::bit_width(n) > kMaxExponent)
    throw std::overflow_error("discrepancy: common denominator too large");

  std::vector<std::uint64_t> scaled(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    scaled[i] = scale_to(points[i], k);
  std::sort(scaled.begin(), scaled.end());

  // Unique positions with multiplicities and prefix counts.
  std::vector<std::uint64_t> pos;
  std::vector<long long> cnt;
  for (std::uint64_t q : scaled) {
    if (pos.empty() || pos.back() != q) {
      pos.push_back(q);
      cnt.push_back(0);
    }
    ++cnt.back();
  }
  const std::size_t m = pos.size();
  std::vector<long long> prefix(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + cnt[i];

  const long long turn = static_cast<long long>(pow2(k));
  const long long nn = static_cast<long long>(n);

  // Deviation numerators live over the common denominator N * 2^k.
  long long best = -1;
  Arc witness;
  auto consider = [&](long long count, long long length, const Arc& arc) {
    const long long num = std::llabs(count * turn - length * nn);
    if (num > best) {
      best = num;
      witness = arc;
    }
  };

  auto angle_at = [&](std::size_t i) {
    return DyadicAngle::from_fraction(pos[i], k);
  };

  // Full circle and empty arc first; both deviate by zero.
  consider(nn, turn, Arc{DyadicAngle{}, DyadicAngle{}, true, false});
  consider(0, 0, Arc{DyadicAngle{}, DyadicAngle{}, true, false});

  for (std::size_t i = 0; i < m; ++i) {
    const DyadicAngle ai = angle_at(i);
    // Degenerate pair: the point itself and its complement.
    consider(cnt[i], 0, Arc{ai, ai, true, true});
    consider(nn - cnt[i], turn, Arc{ai, ai, false, false});
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      long long between;
      long long length;
      if (i < j) {
        between = prefix[j] - prefix[i + 1];
        length = static_cast<long long>(pos[j] - pos[i]);
      } else {
        between = (prefix[m] - prefix[i + 1]) + prefix[j];
        length = static_cast<long long>(pow2(k) - pos[i] + pos[j]);
      }
      const DyadicAngle aj = angle_at(j);
      for (int lo_closed = 0; lo_closed < 2; ++lo_closed) {
        for (int hi_closed = 0; hi_closed < 2; ++hi_closed) {
          const long long count = between + (lo_closed ? cnt[i] : 0) +
                                  (hi_closed ? cnt[j] : 0);
          consider(count, length,
                   Arc{ai, aj, lo_closed != 0, hi_closed != 0});
        }
      }
    }
  }

  return DiscrepancyResult{Rational(best, nn * turn), witness,
                           points.size()};
}

}  // namespace steiner
