#pragma once

#include <cstdint>
#include <string>

#include "steiner/grid.hpp"

namespace steiner {

/// Built-in test inputs, fixed shapes in plane units:
///  - "bump":   off-center Gaussian exp(-4 |z - 0.7|^2) cut off outside the
///              centered disk |z| <= 1.2.
///  - "square": separable plateau g(x) g(y); g is 1 on |t| <= 0.5 and
///              tapers smoothly to 0 at |t| = 0.9. Symmetric under both
///              axes and quarter turns, but not radial.
///  - "disk":   radial cap max(0, 1 - (|z|/1.2)^2).
/// All three fit inside the disk of radius L/sqrt(2) for L >= 1.8.
GridFunction builtin_input(const std::string& name, int resolution,
                           double half_width);

/// Uniform [0,1) samples on every cell, fixed row-major draw order.
GridFunction random_grid(std::uint64_t seed, int resolution,
                         double half_width);

/// Uniform [0,1) samples on cells inside the disk of radius
/// 0.95 * L/sqrt(2), zero outside; satisfies the rotation support bound.
GridFunction random_disk_grid(std::uint64_t seed, int resolution,
                              double half_width);

}  // namespace steiner
