#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "steiner/grid.hpp"
#include "steiner/sequences.hpp"

namespace steiner {

struct ReportSettings {
  int nonradial_rings = 0;    // 0: resolution / 2
  int nonradial_samples = 128;
  int stride = 1;             // record every stride-th step; 0 and the
                              // final step are always recorded
  bool renormalize_mass = false;
};

struct ReportRow {
  std::uint64_t step = 0;  // 0 is the initial state; row k >= 1 follows
                           // the k-th symmetrization
  DyadicAngle angle;       // direction applied to produce this row
  double distance = 0.0;   // sup distance to the radial target
  double gauss = 0.0;
  double mass_drift = 0.0; // (mass - initial mass) / initial mass
  double nonradial = 0.0;
  double ms = 0.0;         // wall time of the step; not covered by the
                           // determinism guarantee
};

struct ConvergenceReport {
  std::string input;
  int resolution = 0;
  double half_width = 0.0;
  std::string sequence;
  std::uint64_t steps = 0;
  ReportSettings settings;
  std::vector<ReportRow> rows;

  /// Reproducibility stanza ('#' lines), then
  /// "step,angle_num,angle_den,distance,J,mass_drift,nonradial_energy,ms".
  void write_csv(std::ostream& os) const;
};

struct IterationResult {
  ConvergenceReport report;
  GridFunction final;
  GridFunction target;  // radial rearrangement of the input, fixed up front
};

/// Drives f through steiner_direction along seq.angle(0..steps-1),
/// recording the observables against the fixed radial target. Errors
/// (support violation, non-finite values) carry the step index.
IterationResult iterate(const GridFunction& f, const DirectionSequence& seq,
                        std::uint64_t steps,
                        const ReportSettings& settings = {},
                        const std::string& input_name = "grid");

/// Max over sampled steps m of sup | rotate(f_m, -theta_m) - g_m |, where
/// f_m is the direct iteration and g_m the rotated-frame recursion
/// g_m = steiner_vertical(rotate(g_{m-1}, -gap_m)) under the same
/// direction sequence. The continuum identity is exact; the discrete gap
/// is interpolation error.
double frame_consistency_error(const GridFunction& f,
                               std::span<const std::uint64_t> sample_steps);

/// Checks the dyadic-block structure of the direction increments at
/// (j, n), 1 <= n < 2^j: gap(2^j + n) must equal gap(n) exactly, and the
/// rotated-frame recursion must track the direct iterates within
/// frame_tol at steps {1, 2, 4, 8}.
bool gap_recursion_check(const GridFunction& f, unsigned j, std::uint64_t n,
                         double frame_tol);

struct SequenceComparison {
  std::string sequence;
  double initial_distance = 0.0;
  ReportRow final_row;
};

/// Runs iterate once per sequence on the same input and collects the
/// final observables side by side.
std::vector<SequenceComparison> compare_sequences(
    const GridFunction& f, const std::vector<DirectionSequence>& sequences,
    std::uint64_t steps, const ReportSettings& settings = {},
    const std::string& input_name = "grid");

}  // namespace steiner
