#include "steiner/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "steiner/calibration.hpp"
#include "steiner/experiment.hpp"
#include "steiner/grid.hpp"
#include "steiner/inputs.hpp"
#include "steiner/rearrange.hpp"

namespace steiner {

namespace {

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::string slack(double measured, double bound) {
  std::ostringstream os;
  os << "measured " << measured << " vs bound " << bound;
  return os.str();
}

bool same_multiset(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Dot product summed in ascending term order; depends only on the term
// multiset, which keeps tied rearrangements exactly tied.
double sorted_dot(std::span<const double> v, std::span<const double> u) {
  std::vector<double> terms(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) terms[i] = v[i] * u[i];
  std::sort(terms.begin(), terms.end());
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

const DyadicAngle kTestAngles[] = {
    DyadicAngle::from_fraction(0, 0),  // 0
    DyadicAngle::from_fraction(1, 2),  // quarter turn
    DyadicAngle::from_fraction(1, 3),  // eighth turn
    DyadicAngle::from_fraction(3, 3),  // three eighths
};

}  // namespace

std::vector<VerifyCheck> verify_angles() {
  std::vector<VerifyCheck> out;

  {
    bool ok = true;
    for (unsigned j = 1; j <= 12 && ok; ++j) {
      const std::uint64_t block = std::uint64_t(1) << j;
      for (std::uint64_t n = 1; n < block; ++n)
        if (gap(block + n) != gap(n)) {
          ok = false;
          break;
        }
    }
    out.push_back({"gap-selfsimilarity j<=12", ok, "exact"});
  }

  {
    bool ok = true;
    for (unsigned j = 1; j <= 30; ++j) {
      const DyadicAngle expect = DyadicAngle::from_fraction(3, j + 1);
      if (gap(std::uint64_t(1) << j).as_angle() != expect) {
        ok = false;
        break;
      }
    }
    out.push_back({"gap-power-of-two j<=30", ok, "exact"});
  }

  {
    bool ok = true;
    for (std::uint64_t n = 0; n < 4096 && ok; ++n) {
      const DyadicAngle a = vdc_angle(n);
      const bool canonical = (a.numerator == 0 && a.exponent == 0) ||
                             (a.numerator % 2 == 1 &&
                              a.numerator < (std::uint64_t(1) << a.exponent));
      ok = canonical &&
           DyadicAngle::from_fraction(a.numerator, a.exponent) == a;
    }
    out.push_back({"vdc-canonical-roundtrip", ok, "exact"});
  }

  {
    bool ok = true;
    std::vector<DyadicAngle> pts;
    for (std::uint64_t n = 0; n < 64 && ok; ++n) {
      pts.push_back(vdc_angle(n));
      const DiscrepancyResult d = discrepancy(pts);
      ok = d.value >= Rational(0, 1) && d.value <= Rational(1, 1) &&
           arc_discrepancy(pts, d.witness_arc) == d.value;
    }
    out.push_back({"discrepancy-witness-exact", ok, "exact"});
  }

  {
    double worst = 0.0;
    std::vector<DyadicAngle> pts;
    for (std::uint64_t n = 0; n < (1u << 12); ++n) {
      pts.push_back(vdc_angle(n));
      const std::uint64_t count = n + 1;
      if (count >= 16 && (count & (count - 1)) == 0) {
        const double dn = discrepancy(pts).value.to_double();
        worst = std::max(
            worst, count * dn / std::log2(static_cast<double>(count) + 1.0));
      }
    }
    out.push_back({"equidistribution-constant N<=4096",
                   worst <= calib::vdc_discrepancy_constant,
                   slack(worst, calib::vdc_discrepancy_constant)});
  }

  return out;
}

std::vector<VerifyCheck> verify_rearrange() {
  std::vector<VerifyCheck> out;
  std::mt19937_64 gen(7);

  bool multiset_ok = true;
  bool idempotent_ok = true;
  bool nonexpansive_ok = true;
  bool gain_ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = static_cast<std::size_t>(gen() % 34);
    std::vector<double> v(m), w(m);
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = uniform01(gen);
      w[i] = uniform01(gen);
    }
    const std::vector<double> rv = rearrange_1d(v);
    const std::vector<double> rw = rearrange_1d(w);

    multiset_ok = multiset_ok && same_multiset(v, rv);
    idempotent_ok = idempotent_ok && rearrange_1d(rv) == rv;

    double din = 0.0, dout = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      din = std::max(din, std::fabs(v[i] - w[i]));
      dout = std::max(dout, std::fabs(rv[i] - rw[i]));
    }
    nonexpansive_ok = nonexpansive_ok && dout <= din;

    // Centered Gaussian weights are symmetric decreasing under the same
    // placement pattern.
    std::vector<double> u(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double y = (2.0 * static_cast<double>(i) + 1.0 -
                        static_cast<double>(m)) /
                       static_cast<double>(m);
      u[i] = std::exp(-y * y);
    }
    gain_ok = gain_ok && sorted_dot(rv, u) >= sorted_dot(v, u);
  }
  out.push_back({"multiset-preserved", multiset_ok, "exact"});
  out.push_back({"idempotent", idempotent_ok, "exact"});
  out.push_back({"nonexpansive-max-metric", nonexpansive_ok, "exact"});
  out.push_back({"weighted-gain-gaussian", gain_ok, "exact"});
  return out;
}

std::vector<VerifyCheck> verify_grid() {
  std::vector<VerifyCheck> out;
  const int n = 64;
  const double L = 2.0;

  {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 32 && ok; ++seed) {
      const GridFunction f = random_grid(seed, n, L);
      const std::vector<double> fv(f.values().begin(), f.values().end());
      for (const GridFunction& g : {steiner_vertical(f), rearrange_radial(f)}) {
        ok = ok &&
             same_multiset(fv, {g.values().begin(), g.values().end()}) &&
             f.mass() == g.mass();
      }
    }
    out.push_back({"equimeasurable-mass-preserving", ok, "exact"});
  }

  {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 16 && ok; ++seed) {
      const GridFunction f = random_disk_grid(2 * seed, n, L);
      const GridFunction g = random_disk_grid(2 * seed + 1, n, L);
      const double before = sup_distance(f, g);
      ok = ok &&
           sup_distance(steiner_vertical(f), steiner_vertical(g)) <= before &&
           sup_distance(rearrange_radial(f), rearrange_radial(g)) <= before;
      for (const DyadicAngle& a : kTestAngles) {
        ok = ok && sup_distance(rotate(f, a), rotate(g, a)) <= before &&
             sup_distance(steiner_direction(f, a),
                          steiner_direction(g, a)) <= before;
      }
    }
    out.push_back({"nonexpansive-operators", ok, "exact"});
  }

  {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 32 && ok; ++seed) {
      const GridFunction f = random_grid(seed, n, L);
      ok = gauss_functional(steiner_vertical(f)) >= gauss_functional(f);
    }
    out.push_back({"j-monotone-vertical", ok, "exact"});
  }

  {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
      const GridFunction f = random_disk_grid(seed, n, L);
      const double j0 = gauss_functional(f);
      for (const DyadicAngle& a : kTestAngles)
        worst = std::max(worst,
                         j0 - gauss_functional(steiner_direction(f, a)));
    }
    out.push_back({"j-monotone-direction-budget",
                   worst <= calib::eps_j(n), slack(worst, calib::eps_j(n))});
  }

  {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 32 && ok; ++seed) {
      const GridFunction f = random_grid(seed, n, L);
      const double j0 = gauss_functional(f);
      for (unsigned q = 1; q < 4; ++q)
        ok = ok &&
             gauss_functional(rotate(f, DyadicAngle::from_fraction(q, 2))) ==
                 j0;
    }
    out.push_back({"j-rotation-invariant-quarter", ok, "exact (bitwise)"});
  }

  {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 16 && ok; ++seed) {
      const GridFunction f = random_grid(seed, n, L);
      const GridFunction sv = steiner_vertical(f);
      const GridFunction rr = rearrange_radial(f);
      ok = sup_distance(steiner_vertical(sv), sv) == 0.0 &&
           sup_distance(rearrange_radial(rr), rr) == 0.0;
    }
    out.push_back({"idempotent-operators", ok, "exact"});
  }

  {
    const GridFunction radial = rearrange_radial(builtin_input("bump", n, L));
    double worst = 0.0;
    for (const DyadicAngle& a : kTestAngles)
      worst = std::max(worst,
                       sup_distance(steiner_direction(radial, a), radial));
    out.push_back({"radial-fixed-point-drift", worst <= calib::tau_interp(n),
                   slack(worst, calib::tau_interp(n))});
  }

  {
    const int nn = 128;
    const GridFunction radial = GridFunction::sample(
        [](double x, double y) { return std::exp(-(x * x + y * y)); }, nn, L);
    const int rings = nn / 2, samples = 128;
    const double floor_rel = nonradial_energy(radial, rings, samples) /
                             ring_energy(radial, rings, samples);
    const GridFunction bump = builtin_input("bump", nn, L);
    const double bump_nre = nonradial_energy(bump, rings, samples);
    const double bump_star_nre =
        nonradial_energy(rearrange_radial(bump), rings, samples);
    const bool ok =
        floor_rel <= 1e-6 &&
        floor_rel <= calib::nonradial_smooth_floor_rel_128 &&
        bump_star_nre <= calib::nonradial_rearranged_floor_128 &&
        bump_nre > 1e3 * calib::nonradial_rearranged_floor_128;
    std::ostringstream os;
    os << "radial floor " << floor_rel << " rel, bump* " << bump_star_nre
       << ", bump " << bump_nre;
    out.push_back({"nonradial-energy-floors", ok, os.str()});
  }

  {
    const GridFunction one = GridFunction::sample(
        [](double, double) { return 1.0; }, 256, 4.0);
    const double err = std::fabs(gauss_functional(one) - std::numbers::pi);
    out.push_back(
        {"gauss-quadrature-pi", err <= 1e-3, slack(err, 1e-3)});
  }

  return out;
}

std::vector<VerifyCheck> verify_experiment() {
  std::vector<VerifyCheck> out;
  const double L = 2.0;
  const GridFunction bump64 = builtin_input("bump", 64, L);
  const GridFunction bump128 = builtin_input("bump", 128, L);
  const DirectionSequence vdc = DirectionSequence::van_der_corput();

  {
    const IterationResult a = iterate(bump64, vdc, 8);
    const IterationResult b = iterate(bump64, vdc, 8);
    bool ok = a.report.rows.size() == b.report.rows.size() &&
              sup_distance(a.final, b.final) == 0.0;
    for (std::size_t i = 0; ok && i < a.report.rows.size(); ++i) {
      const ReportRow& ra = a.report.rows[i];
      const ReportRow& rb = b.report.rows[i];
      ok = ra.step == rb.step && ra.angle == rb.angle &&
           ra.distance == rb.distance && ra.gauss == rb.gauss &&
           ra.mass_drift == rb.mass_drift && ra.nonradial == rb.nonradial;
    }
    out.push_back({"deterministic-iterate", ok, "exact (ms column excluded)"});
  }

  {
    const IterationResult res = iterate(bump128, vdc, 32);
    bool ascent = true;
    bool bounded = true;
    const double d0 = res.report.rows.front().distance;
    for (std::size_t i = 1; i < res.report.rows.size(); ++i) {
      const double dj = res.report.rows[i - 1].gauss - res.report.rows[i].gauss;
      ascent = ascent && dj <= calib::eps_j_128;
      bounded = bounded &&
                res.report.rows[i].distance <=
                    d0 + static_cast<double>(res.report.rows[i].step) *
                             calib::tau_interp_128;
    }
    out.push_back({"j-ascent-budget", ascent, "per-step budget eps_j(128)"});
    out.push_back({"distance-budget", bounded,
                   "d0 + step * tau_interp(128) envelope"});
  }

  {
    const IterationResult res = iterate(rearrange_radial(bump128), vdc, 16);
    double worst = 0.0;
    for (const ReportRow& r : res.report.rows)
      worst = std::max(worst, r.distance);
    out.push_back({"target-stationarity", worst <= calib::radial_drift_bound_128,
                   slack(worst, calib::radial_drift_bound_128)});
  }

  {
    const bool ok =
        gap_recursion_check(bump128, 3, 1, calib::frame_tolerance_128) &&
        gap_recursion_check(bump128, 4, 7, calib::frame_tolerance_128);
    out.push_back({"gap-recursion-frames", ok, "exact gaps + frame budget"});
  }

  {
    const GridFunction square = builtin_input("square", 128, L);
    const DirectionSequence cycle = DirectionSequence::fixed_cycle(
        {DyadicAngle{}, DyadicAngle::from_fraction(1, 2)});
    const IterationResult res = iterate(square, cycle, 16);
    const double d0 = res.report.rows.front().distance;
    bool ok = d0 > 0.0;
    for (const ReportRow& r : res.report.rows)
      if (r.step >= 2) ok = ok && r.distance >= 0.5 * d0;
    out.push_back({"negative-control-axis-cycle", ok,
                   "distance stays above half the initial"});
  }

  return out;
}

std::vector<VerifyCheck> verify_suite(const std::string& suite) {
  if (suite == "angles") return verify_angles();
  if (suite == "rearrange") return verify_rearrange();
  if (suite == "grid") return verify_grid();
  if (suite == "experiment") return verify_experiment();
  if (suite == "all") {
    std::vector<VerifyCheck> all;
    for (const auto* s : {"angles", "rearrange", "grid", "experiment"}) {
      std::vector<VerifyCheck> part = verify_suite(s);
      for (VerifyCheck& c : part) {
        c.name = std::string(s) + "." + c.name;
        all.push_back(std::move(c));
      }
    }
    return all;
  }
  throw std::invalid_argument(
      "unknown suite '" + suite +
      "' (expected angles, rearrange, grid, experiment or all)");
}

}  // namespace steiner
