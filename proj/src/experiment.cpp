#include "steiner/experiment.hpp"

#include <chrono>
#include <numbers>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "steiner/grid_io.hpp"

namespace steiner {

namespace {

int rings_for(const ReportSettings& s, int resolution) {
  return s.nonradial_rings > 0 ? s.nonradial_rings : resolution / 2;
}

ReportRow observe(std::uint64_t step, const DyadicAngle& angle,
                  const GridFunction& f, const GridFunction& target,
                  double mass0, const ReportSettings& s, double ms) {
  ReportRow row;
  row.step = step;
  row.angle = angle;
  row.distance = sup_distance(f, target);
  row.gauss = gauss_functional(f);
  row.mass_drift = mass0 > 0.0 ? (f.mass() - mass0) / mass0 : 0.0;
  row.nonradial =
      nonradial_energy(f, rings_for(s, f.resolution()), s.nonradial_samples);
  row.ms = ms;
  return row;
}

}  // namespace

void ConvergenceReport::write_csv(std::ostream& os) const {
  os << "# input=" << input << "\n";
  os << "# resolution=" << resolution << "\n";
  os << "# half_width=" << format_double(half_width) << "\n";
  os << "# sequence=" << sequence << "\n";
  os << "# steps=" << steps << "\n";
  os << "# nonradial_rings=" << rings_for(settings, resolution)
     << " nonradial_samples=" << settings.nonradial_samples << "\n";
  os << "# stride=" << settings.stride
     << " renormalize_mass=" << (settings.renormalize_mass ? 1 : 0) << "\n";
  os << "# row 0 is the initial state; row k follows symmetrization k\n";
  os << "step,angle_num,angle_den,distance,J,mass_drift,nonradial_energy,ms\n";
  for (const ReportRow& r : rows) {
    os << r.step << "," << r.angle.numerator << ","
       << (std::uint64_t(1) << r.angle.exponent) << ","
       << format_double(r.distance) << "," << format_double(r.gauss) << ","
       << format_double(r.mass_drift) << "," << format_double(r.nonradial)
       << "," << format_double(r.ms) << "\n";
  }
}

IterationResult iterate(const GridFunction& f, const DirectionSequence& seq,
                        std::uint64_t steps, const ReportSettings& settings,
                        const std::string& input_name) {
  if (settings.stride <= 0)
    throw std::invalid_argument("iterate: stride must be positive");
  // The support precondition applies to the input. Later iterates grow a
  // sub-noise interpolation halo (values below ~1e-3 of the maximum even
  // after hundreds of steps) that would spuriously trip a per-step check;
  // its cost shows up in the recorded mass drift instead.
  const double limit = f.half_width() / std::numbers::sqrt2;
  const double radius = support_radius(f);
  if (radius > limit)
    throw std::runtime_error(
        "iterate: input support radius " + std::to_string(radius) +
        " exceeds half_width/sqrt(2) = " + std::to_string(limit));
  GridFunction target = rearrange_radial(f);
  GridFunction cur = f;
  const double mass0 = f.mass();

  ConvergenceReport report;
  report.input = input_name;
  report.resolution = f.resolution();
  report.half_width = f.half_width();
  report.sequence = seq.name();
  report.steps = steps;
  report.settings = settings;
  report.rows.push_back(
      observe(0, DyadicAngle{}, cur, target, mass0, settings, 0.0));

  for (std::uint64_t k = 0; k < steps; ++k) {
    const DyadicAngle angle = seq.angle(k);
    const auto t0 = std::chrono::steady_clock::now();
    cur = rotate(steiner_vertical(rotate(cur, angle.negated())), angle);
    if (settings.renormalize_mass) {
      const double m = cur.mass();
      if (m > 0.0) cur.scale(mass0 / m);
    }
    if (!cur.all_finite())
      throw std::runtime_error("iterate: step " + std::to_string(k + 1) +
                               ": non-finite value in iterate");
    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    const std::uint64_t done = k + 1;
    if (done % static_cast<std::uint64_t>(settings.stride) == 0 ||
        done == steps)
      report.rows.push_back(
          observe(done, angle, cur, target, mass0, settings, ms));
  }
  return IterationResult{std::move(report), std::move(cur),
                         std::move(target)};
}

double frame_consistency_error(const GridFunction& f,
                               std::span<const std::uint64_t> sample_steps) {
  std::uint64_t last = 0;
  for (std::uint64_t m : sample_steps) last = std::max(last, m);
  if (last == 0) return 0.0;

  // Direct iteration f_m and rotated-frame recursion g_m side by side.
  // f_0 = S_{theta_0} f with theta_0 = 0, so both start at S f.
  GridFunction direct = steiner_vertical(f);
  GridFunction frame = direct;
  double worst = 0.0;
  auto sampled = [&](std::uint64_t m) {
    for (std::uint64_t s : sample_steps)
      if (s == m) return true;
    return false;
  };
  for (std::uint64_t m = 1; m <= last; ++m) {
    const DyadicAngle theta = vdc_angle(m);
    direct = steiner_direction(direct, theta);
    frame = steiner_vertical(rotate(frame, gap(m).as_angle().negated()));
    if (sampled(m)) {
      const GridFunction unrotated = rotate(direct, theta.negated());
      worst = std::max(worst, sup_distance(unrotated, frame));
    }
  }
  return worst;
}

bool gap_recursion_check(const GridFunction& f, unsigned j, std::uint64_t n,
                         double frame_tol) {
  if (j == 0 || n == 0 || n >= (std::uint64_t(1) << j))
    throw std::invalid_argument(
        "gap_recursion_check: need 1 <= n < 2^j with j >= 1");
  if (gap((std::uint64_t(1) << j) + n) != gap(n)) return false;
  static constexpr std::uint64_t kFrameSteps[] = {1, 2, 4, 8};
  return frame_consistency_error(f, kFrameSteps) <= frame_tol;
}

std::vector<SequenceComparison> compare_sequences(
    const GridFunction& f, const std::vector<DirectionSequence>& sequences,
    std::uint64_t steps, const ReportSettings& settings,
    const std::string& input_name) {
  std::vector<SequenceComparison> out;
  out.reserve(sequences.size());
  for (const DirectionSequence& seq : sequences) {
    IterationResult res = iterate(f, seq, steps, settings, input_name);
    SequenceComparison row;
    row.sequence = seq.name();
    row.initial_distance = res.report.rows.front().distance;
    row.final_row = res.report.rows.back();
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace steiner
