#pragma once

#include <string>
#include <vector>

namespace steiner {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // "exact" or the measured slack vs its bound
};

/// Invariant suites, one per module, run with fixed seeds. Exact checks
/// compare integers or bit patterns; toleranced checks use the pinned
/// calibration bounds.
std::vector<VerifyCheck> verify_angles();
std::vector<VerifyCheck> verify_rearrange();
std::vector<VerifyCheck> verify_grid();
std::vector<VerifyCheck> verify_experiment();

/// suite is one of angles, rearrange, grid, experiment, all.
std::vector<VerifyCheck> verify_suite(const std::string& suite);

}  // namespace steiner
