#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracles {

// Dense-scan circle discrepancy: scans arcs whose endpoints run over a
// fine grid of turn positions (resolution eps) together with the point
// positions themselves, where the open/closed limits are realized by
// counting with < versus <=. For a closed arc from a to b
// (counterclockwise, wrapping allowed),
//     count/N - length = phi_plus(b) - phi_minus(a),
// with phi_plus(t) = #{points <= t}/N - t and
// phi_minus(t) = #{points < t}/N - t; the open complement realizes the
// negated value. Scanning all candidate pairs therefore reduces to
// maximizing phi_plus and minimizing phi_minus over the candidates.
inline double discrepancy_dense_scan(std::vector<double> turn_positions,
                                     int grid = 10000) {
  std::sort(turn_positions.begin(), turn_positions.end());
  const double n = static_cast<double>(turn_positions.size());

  std::vector<double> candidates;
  candidates.reserve(static_cast<std::size_t>(grid) + turn_positions.size());
  for (int k = 0; k < grid; ++k)
    candidates.push_back(static_cast<double>(k) / grid);
  for (double p : turn_positions) candidates.push_back(p);

  double best_plus = -1e300;
  double best_minus = 1e300;
  for (double t : candidates) {
    const auto le = std::upper_bound(turn_positions.begin(),
                                     turn_positions.end(), t);
    const auto lt = std::lower_bound(turn_positions.begin(),
                                     turn_positions.end(), t);
    const double phi_plus =
        static_cast<double>(le - turn_positions.begin()) / n - t;
    const double phi_minus =
        static_cast<double>(lt - turn_positions.begin()) / n - t;
    best_plus = std::max(best_plus, phi_plus);
    best_minus = std::min(best_minus, phi_minus);
  }
  return best_plus - best_minus;
}

}  // namespace oracles
