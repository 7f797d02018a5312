// Command-line surface for the Steiner symmetrization toolkit: direction
// sequences and their discrepancy, single symmetrization steps, iterated
// experiments with convergence reports, invariant suites, and the
// calibration runner that produces the pinned tolerance block.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steiner/angles.hpp"
#include "steiner/calibration.hpp"
#include "steiner/experiment.hpp"
#include "steiner/grid.hpp"
#include "steiner/grid_io.hpp"
#include "steiner/inputs.hpp"
#include "steiner/sequences.hpp"
#include "steiner/verify.hpp"

namespace {

using namespace steiner;

// Exit codes: 0 success, 1 usage, 2 invariant/assertion failure,
// 3 numeric or data failure.
struct InvariantFailure {
  std::string message;
};

struct CommonOpts {
  int resolution = 128;
  double half_width = 2.0;
  std::uint64_t seed = 0;
  std::string input_path;
  std::string builtin;

  void attach(CLI::App* cmd, bool with_input) {
    cmd->add_option("--resolution", resolution, "Grid resolution n (n x n)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--half-width", half_width,
                    "Domain half width L, domain [-L, L]^2")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Seed for random direction sequences");
    if (with_input) {
      auto* in = cmd->add_option("--input", input_path,
                                 "Grid file to read (first line 'n L')");
      auto* bi = cmd->add_option("--builtin", builtin,
                                 "Built-in input: bump, square or disk");
      in->excludes(bi);
    }
  }

  GridFunction load(std::string& descriptor) const {
    if (!input_path.empty()) {
      descriptor = input_path;
      return read_grid_file(input_path);
    }
    const std::string name = builtin.empty() ? "bump" : builtin;
    descriptor = "builtin:" + name;
    return builtin_input(name, resolution, half_width);
  }

  std::vector<std::string> stanza(const std::string& command,
                                  const std::string& descriptor) const {
    std::vector<std::string> s;
    s.push_back("command=" + command);
    s.push_back("input=" + descriptor);
    s.push_back("resolution=" + std::to_string(resolution));
    s.push_back("half_width=" + format_double(half_width));
    s.push_back("seed=" + std::to_string(seed));
    return s;
  }
};

std::ostream& open_or_stdout(std::optional<std::ofstream>& file,
                             const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.emplace(path);
  if (!*file) throw std::runtime_error("cannot open for writing: " + path);
  return *file;
}

// ---------------------------------------------------------------- vdc --

void run_vdc(std::uint64_t count, bool gaps, bool with_discrepancy,
             const std::string& output) {
  if (count == 0) throw CLI::ValidationError("--count must be >= 1");
  std::optional<std::ofstream> file;
  std::ostream& os = open_or_stdout(file, output);
  os << "# command=vdc count=" << count << " gaps=" << (gaps ? 1 : 0)
     << " discrepancy=" << (with_discrepancy ? 1 : 0) << "\n";
  os << "n,theta_turn,theta_radians";
  if (gaps) os << ",gap_turn,gap_turn_decimal";
  if (with_discrepancy) os << ",prefix_N,D_N,D_N_decimal";
  os << "\n";
  std::vector<DyadicAngle> prefix;
  for (std::uint64_t n = 0; n < count; ++n) {
    const DyadicAngle theta = vdc_angle(n);
    prefix.push_back(theta);
    os << n << "," << theta.str() << "," << format_double(theta.radians());
    if (gaps) {
      if (n == 0) {
        os << ",,";
      } else {
        const TurnFraction g = gap(n);
        os << "," << g.str() << "," << format_double(g.turns());
      }
    }
    if (with_discrepancy) {
      const std::uint64_t N = n + 1;
      if ((N & (N - 1)) == 0) {
        const DiscrepancyResult d = discrepancy(prefix);
        os << "," << N << "," << d.value.str() << ","
           << format_double(d.value.to_double());
      } else {
        os << ",,,";
      }
    }
    os << "\n";
  }
}

// --------------------------------------------------------- symmetrize --

void run_symmetrize(const CommonOpts& common, const std::string& angle_text,
                    const std::string& output, const std::string& pgm) {
  const DyadicAngle angle = parse_turn_fraction(angle_text);
  std::string descriptor;
  const GridFunction f = common.load(descriptor);
  const GridFunction g = steiner_direction(f, angle);
  const double mass_in = f.mass();
  const double mass_out = g.mass();
  const double drift = mass_in > 0.0 ? (mass_out - mass_in) / mass_in : 0.0;

  auto stanza = common.stanza("symmetrize", descriptor);
  stanza.push_back("angle=" + angle.str());
  if (!output.empty()) write_grid_file(output, g, stanza);
  if (!pgm.empty()) write_pgm_file(pgm, g);

  std::cout << "# angle=" << angle.str() << " input=" << descriptor << "\n";
  std::cout << "mass_in=" << format_double(mass_in)
            << " mass_out=" << format_double(mass_out)
            << " mass_drift=" << format_double(drift)
            << " sup_change=" << format_double(sup_distance(f, g)) << "\n";
}

// ---------------------------------------------------------- rearrange --

void run_rearrange(const CommonOpts& common, const std::string& output,
                   const std::string& profile, const std::string& pgm) {
  std::string descriptor;
  const GridFunction f = common.load(descriptor);
  const GridFunction g = rearrange_radial(f);
  auto stanza = common.stanza("rearrange", descriptor);
  if (!output.empty()) write_grid_file(output, g, stanza);
  if (!profile.empty()) {
    std::ofstream os(profile);
    if (!os) throw std::runtime_error("cannot open for writing: " + profile);
    write_profile_csv(os, g, stanza);
  }
  if (!pgm.empty()) write_pgm_file(pgm, g);
  std::cout << "# input=" << descriptor << "\n";
  std::cout << "mass=" << format_double(g.mass())
            << " sup_change=" << format_double(sup_distance(f, g))
            << " support_radius=" << format_double(support_radius(g)) << "\n";
}

// ------------------------------------------------------------ iterate --

void run_iterate(const CommonOpts& common, const std::string& seq_text,
                 std::uint64_t steps, const std::string& report_path,
                 const std::string& output, const std::string& pgm,
                 int stride, bool renormalize, double assert_converged) {
  const DirectionSequence seq = DirectionSequence::parse(seq_text, common.seed);
  std::string descriptor;
  const GridFunction f = common.load(descriptor);
  ReportSettings settings;
  settings.stride = stride;
  settings.renormalize_mass = renormalize;
  const IterationResult res = iterate(f, seq, steps, settings, descriptor);

  std::optional<std::ofstream> file;
  std::ostream& os = open_or_stdout(file, report_path);
  os << "# command=iterate seed=" << common.seed << "\n";
  res.report.write_csv(os);

  auto stanza = common.stanza("iterate", descriptor);
  stanza.push_back("sequence=" + seq.name());
  stanza.push_back("steps=" + std::to_string(steps));
  if (!output.empty()) write_grid_file(output, res.final, stanza);
  if (!pgm.empty()) write_pgm_file(pgm, res.final);

  if (assert_converged > 0.0) {
    const double d0 = res.report.rows.front().distance;
    const double dn = res.report.rows.back().distance;
    if (dn > assert_converged * d0)
      throw InvariantFailure{"final distance " + format_double(dn) +
                             " exceeds " + format_double(assert_converged) +
                             " x initial " + format_double(d0)};
  }
}

// ------------------------------------------------------------ compare --

void run_compare(const CommonOpts& common,
                 const std::vector<std::string>& seq_texts,
                 std::uint64_t steps, const std::string& output) {
  std::vector<DirectionSequence> seqs;
  for (const std::string& t : seq_texts)
    seqs.push_back(DirectionSequence::parse(t, common.seed));
  std::string descriptor;
  const GridFunction f = common.load(descriptor);
  const auto table = compare_sequences(f, seqs, steps, {}, descriptor);

  std::optional<std::ofstream> file;
  std::ostream& os = open_or_stdout(file, output);
  for (const std::string& line : common.stanza("compare", descriptor))
    os << "# " << line << "\n";
  os << "# steps=" << steps << "\n";
  os << "sequence,initial_distance,final_distance,final_J,final_mass_drift,"
        "final_nonradial_energy\n";
  for (const SequenceComparison& row : table)
    os << row.sequence << "," << format_double(row.initial_distance) << ","
       << format_double(row.final_row.distance) << ","
       << format_double(row.final_row.gauss) << ","
       << format_double(row.final_row.mass_drift) << ","
       << format_double(row.final_row.nonradial) << "\n";
}

// ------------------------------------------------------------- verify --

void run_verify(const std::string& suite) {
  const std::vector<VerifyCheck> checks = verify_suite(suite);
  bool all_pass = true;
  for (const VerifyCheck& c : checks) {
    std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " ("
              << c.detail << ")\n";
    all_pass = all_pass && c.pass;
  }
  std::cout << (all_pass ? "verify: all checks passed"
                         : "verify: FAILURES present")
            << " [" << checks.size() << " checks]\n";
  if (!all_pass) throw InvariantFailure{"invariant suite '" + suite + "'"};
}

// ---------------------------------------------------------- calibrate --

// Measures every pinned tolerance with fixed seeds and prints the block
// for include/steiner/calibration.hpp.
void run_calibrate() {
  const double L = 2.0;
  std::cout << "# calibration run (fixed seeds, single thread)\n";

  const DyadicAngle eighth = DyadicAngle::from_fraction(1, 3);
  const DyadicAngle three_eighths = DyadicAngle::from_fraction(3, 3);

  // eps_j: worst J drop across one symmetrization step. Measured over 100
  // seeded disk grids at angles 1/8 and 3/8 turn, and along 96-step
  // van der Corput runs on every builtin input; the pin covers all of it.
  for (const int n : {64, 128, 256}) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const GridFunction f = random_disk_grid(seed, n, L);
      const double j0 = gauss_functional(f);
      for (const DyadicAngle& a : {eighth, three_eighths})
        worst = std::max(worst, j0 - gauss_functional(steiner_direction(f, a)));
    }
    double run_worst = 0.0;
    for (const char* name : {"bump", "square", "disk"}) {
      GridFunction f = builtin_input(name, n, L);
      const DirectionSequence seq = DirectionSequence::van_der_corput();
      double prev = gauss_functional(f);
      for (std::uint64_t k = 0; k < 96; ++k) {
        f = rotate(steiner_vertical(rotate(f, seq.angle(k).negated())),
                   seq.angle(k));
        const double cur = gauss_functional(f);
        run_worst = std::max(run_worst, prev - cur);
        prev = cur;
      }
    }
    std::cout << "eps_j_" << n << " = "
              << format_double(std::max(2.0 * std::max(worst, run_worst), 1e-9))
              << "  (max drop: grids " << format_double(worst)
              << ", builtin runs " << format_double(run_worst) << ")\n";
  }

  // tau_interp: radial fixed-point drift over all non-quarter multiples
  // of 1/64 turn, on the bump's radial rearrangement.
  for (const int n : {64, 128, 256}) {
    const GridFunction radial = rearrange_radial(builtin_input("bump", n, L));
    double worst = 0.0;
    for (unsigned k = 1; k < 64; ++k) {
      if (k % 16 == 0) continue;
      const DyadicAngle a = DyadicAngle::from_fraction(k, 6);
      worst = std::max(worst, sup_distance(steiner_direction(radial, a), radial));
    }
    std::cout << "tau_interp_" << n << " = " << format_double(2.0 * worst)
              << "  (max drift " << format_double(worst) << ")\n";
  }

  // Baseline distance and rotation mass drift on the standard bump.
  {
    const GridFunction bump = builtin_input("bump", 128, L);
    const GridFunction star = rearrange_radial(bump);
    std::cout << "baseline_distance_bump_128 = "
              << format_double(sup_distance(bump, star)) << "\n";
    const double m0 = bump.mass();
    const double m1 = rotate(bump, eighth).mass();
    const double drift = std::fabs(m1 - m0) / m0;
    std::cout << "rotate_mass_drift_128 = " << format_double(2.0 * drift)
              << "  (measured " << format_double(drift) << ")\n";
  }

  // Non-radial spectral floors at n = 128.
  {
    const int n = 128, rings = 64, samples = 128;
    const GridFunction radial = GridFunction::sample(
        [](double x, double y) { return std::exp(-(x * x + y * y)); }, n, L);
    const double floor_rel = nonradial_energy(radial, rings, samples) /
                             ring_energy(radial, rings, samples);
    const GridFunction bump = builtin_input("bump", n, L);
    const double bump_nre = nonradial_energy(bump, rings, samples);
    const double star_nre =
        nonradial_energy(rearrange_radial(bump), rings, samples);
    std::cout << "nonradial_smooth_floor_rel_128 = "
              << format_double(2.0 * floor_rel) << "  (measured "
              << format_double(floor_rel) << ")\n";
    std::cout << "nonradial_rearranged_floor_128 = "
              << format_double(2.0 * star_nre) << "  (measured "
              << format_double(star_nre) << ")\n";
    std::cout << "# raw bump nonradial = " << format_double(bump_nre)
              << " (" << format_double(bump_nre / (2.0 * star_nre))
              << " x the rearranged floor)\n";
  }

  // Discrepancy constant for van der Corput prefixes.
  {
    double worst = 0.0;
    std::vector<DyadicAngle> pts;
    for (std::uint64_t n = 0; n < (1u << 12); ++n) {
      pts.push_back(vdc_angle(n));
      const std::uint64_t N = n + 1;
      if (N >= 16 && (N & (N - 1)) == 0) {
        const double dn = discrepancy(pts).value.to_double();
        const double ratio =
            N * dn / std::log2(static_cast<double>(N) + 1.0);
        worst = std::max(worst, ratio);
        std::cout << "# N=" << N << " D_N=" << format_double(dn)
                  << " N*D_N/log2(N+1)=" << format_double(ratio) << "\n";
      }
    }
    std::cout << "vdc_discrepancy_constant = " << format_double(1.25 * worst)
              << "  (max ratio " << format_double(worst) << ")\n";
  }

  // Radial drift along a 64-step run, and the rotated-frame tolerance.
  {
    const GridFunction bump = builtin_input("bump", 128, L);
    const IterationResult res = iterate(
        rearrange_radial(bump), DirectionSequence::van_der_corput(), 64);
    double worst = 0.0;
    for (const ReportRow& r : res.report.rows)
      worst = std::max(worst, r.distance);
    std::cout << "radial_drift_bound_128 = " << format_double(2.0 * worst)
              << "  (max distance " << format_double(worst) << ")\n";

    static constexpr std::uint64_t kFrames[] = {1, 2, 4, 8};
    const double frame = frame_consistency_error(bump, kFrames);
    std::cout << "frame_tolerance_128 = " << format_double(2.0 * frame)
              << "  (measured " << format_double(frame) << ")\n";
  }

  // Informational: the main convergence run and the negative control.
  {
    const GridFunction bump = builtin_input("bump", 128, L);
    const IterationResult res =
        iterate(bump, DirectionSequence::van_der_corput(), 256);
    const ReportRow& first = res.report.rows.front();
    const ReportRow& last = res.report.rows.back();
    std::cout << "# bump/vdc 256 steps: distance " << format_double(first.distance)
              << " -> " << format_double(last.distance) << " (ratio "
              << format_double(last.distance / first.distance) << ")\n";
    std::cout << "# bump/vdc 256 steps: nonradial "
              << format_double(first.nonradial) << " -> "
              << format_double(last.nonradial) << " (ratio "
              << format_double(last.nonradial / first.nonradial) << ")\n";

    const GridFunction square = builtin_input("square", 128, L);
    const DirectionSequence cycle = DirectionSequence::fixed_cycle(
        {DyadicAngle{}, DyadicAngle::from_fraction(1, 2)});
    const IterationResult neg = iterate(square, cycle, 256);
    double min_ratio = 1e300;
    const double d0 = neg.report.rows.front().distance;
    for (const ReportRow& r : neg.report.rows)
      if (r.step >= 2) min_ratio = std::min(min_ratio, r.distance / d0);
    std::cout << "# square/fixed(0,1/4) 256 steps: min distance ratio after "
                 "step 2 = "
              << format_double(min_ratio) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Iterated planar Steiner symmetrization: exact dyadic directions, "
      "grid rearrangements, convergence experiments"};
  app.require_subcommand(1);

  // vdc
  auto* vdc_cmd = app.add_subcommand(
      "vdc", "Print the van der Corput angles as exact turn fractions");
  std::uint64_t vdc_count = 16;
  bool vdc_gaps = false, vdc_disc = false;
  std::string vdc_output;
  vdc_cmd->add_option("--count", vdc_count, "Number of angles")->required();
  vdc_cmd->add_flag("--gaps", vdc_gaps, "Add the consecutive differences");
  vdc_cmd->add_flag("--discrepancy", vdc_disc,
                    "Add exact D_N at power-of-two prefixes");
  vdc_cmd->add_option("--output", vdc_output, "Write to file instead of stdout");

  // symmetrize
  auto* sym_cmd = app.add_subcommand(
      "symmetrize", "One Steiner symmetrization step along a direction");
  CommonOpts sym_common;
  sym_common.attach(sym_cmd, true);
  std::string sym_angle = "0/1", sym_output, sym_pgm;
  sym_cmd->add_option("--angle", sym_angle,
                      "Direction as a turn fraction p/q, q a power of two");
  sym_cmd->add_option("--output", sym_output, "Grid file for the result");
  sym_cmd->add_option("--pgm", sym_pgm, "PGM visualization of the result");

  // rearrange
  auto* rad_cmd = app.add_subcommand(
      "rearrange", "Symmetric decreasing (radial) rearrangement");
  CommonOpts rad_common;
  rad_common.attach(rad_cmd, true);
  std::string rad_output, rad_profile, rad_pgm;
  rad_cmd->add_option("--output", rad_output, "Grid file for the result");
  rad_cmd->add_option("--profile", rad_profile, "Radial profile CSV");
  rad_cmd->add_option("--pgm", rad_pgm, "PGM visualization of the result");

  // iterate
  auto* it_cmd = app.add_subcommand(
      "iterate", "Iterated symmetrization along a direction sequence");
  CommonOpts it_common;
  it_common.attach(it_cmd, true);
  std::string it_seq = "vdc", it_report, it_output, it_pgm;
  std::uint64_t it_steps = 256;
  int it_stride = 1;
  bool it_renorm = false;
  double it_assert = 0.0;
  it_cmd->add_option("--seq", it_seq,
                     "vdc | golden | random | fixed:p/q,p/q,...");
  it_cmd->add_option("--steps", it_steps, "Number of symmetrization steps");
  it_cmd->add_option("--report", it_report, "Report CSV path (default stdout)");
  it_cmd->add_option("--output", it_output, "Grid file for the final iterate");
  it_cmd->add_option("--pgm", it_pgm, "PGM visualization of the final iterate");
  it_cmd->add_option("--stride", it_stride, "Record every stride-th step")
      ->check(CLI::PositiveNumber);
  it_cmd->add_flag("--renormalize", it_renorm,
                   "Rescale each iterate to the initial mass");
  it_cmd->add_option("--assert-converged", it_assert,
                     "Exit 2 unless final distance <= R x initial distance");

  // compare
  auto* cmp_cmd = app.add_subcommand(
      "compare", "Run several direction sequences on the same input");
  CommonOpts cmp_common;
  cmp_common.attach(cmp_cmd, true);
  std::vector<std::string> cmp_seqs;
  std::uint64_t cmp_steps = 256;
  std::string cmp_output;
  cmp_cmd->add_option("--seq", cmp_seqs, "Sequence spec (repeatable)")
      ->required();
  cmp_cmd->add_option("--steps", cmp_steps, "Number of steps");
  cmp_cmd->add_option("--output", cmp_output, "Table path (default stdout)");

  // verify
  auto* ver_cmd = app.add_subcommand(
      "verify", "Run the invariant suites (exit 2 on failure)");
  std::string ver_suite = "all";
  ver_cmd->add_option("suite", ver_suite,
                      "angles | rearrange | grid | experiment | all");

  // calibrate
  auto* cal_cmd = app.add_subcommand(
      "calibrate",
      "Re-measure the pinned tolerances (prints a calibration.hpp block)");

  try {
    app.parse(argc, argv);
    if (vdc_cmd->parsed()) run_vdc(vdc_count, vdc_gaps, vdc_disc, vdc_output);
    if (sym_cmd->parsed())
      run_symmetrize(sym_common, sym_angle, sym_output, sym_pgm);
    if (rad_cmd->parsed())
      run_rearrange(rad_common, rad_output, rad_profile, rad_pgm);
    if (it_cmd->parsed())
      run_iterate(it_common, it_seq, it_steps, it_report, it_output, it_pgm,
                  it_stride, it_renorm, it_assert);
    if (cmp_cmd->parsed())
      run_compare(cmp_common, cmp_seqs, cmp_steps, cmp_output);
    if (ver_cmd->parsed()) run_verify(ver_suite);
    if (cal_cmd->parsed()) run_calibrate();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const InvariantFailure& e) {
    std::cerr << "assertion failed: " << e.message << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
