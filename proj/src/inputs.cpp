#include "steiner/inputs.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace steiner {

namespace {

double bump_fn(double x, double y) {
  if (x * x + y * y > 1.2 * 1.2) return 0.0;
  const double dx = x - 0.7;
  return std::exp(-4.0 * (dx * dx + y * y));
}

// 1 on |t| <= 0.5, cos^2 taper to 0 at |t| = 0.9.
double plateau(double t) {
  const double a = std::fabs(t);
  if (a <= 0.5) return 1.0;
  if (a >= 0.9) return 0.0;
  const double c = std::cos(std::numbers::pi / 2.0 * (a - 0.5) / 0.4);
  return c * c;
}

double square_fn(double x, double y) { return plateau(x) * plateau(y); }

double disk_fn(double x, double y) {
  const double r2 = (x * x + y * y) / (1.2 * 1.2);
  return r2 >= 1.0 ? 0.0 : 1.0 - r2;
}

// Portable uniform draw; uniform_real_distribution is not pinned down by
// the standard, this is.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

GridFunction builtin_input(const std::string& name, int resolution,
                           double half_width) {
  if (name == "bump")
    return GridFunction::sample(bump_fn, resolution, half_width);
  if (name == "square")
    return GridFunction::sample(square_fn, resolution, half_width);
  if (name == "disk")
    return GridFunction::sample(disk_fn, resolution, half_width);
  throw std::invalid_argument("unknown builtin input '" + name +
                              "' (expected bump, square or disk)");
}

GridFunction random_grid(std::uint64_t seed, int resolution,
                         double half_width) {
  GridFunction f(resolution, half_width);
  std::mt19937_64 gen(seed);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) f.at(i, j) = uniform01(gen);
  return f;
}

GridFunction random_disk_grid(std::uint64_t seed, int resolution,
                              double half_width) {
  GridFunction f(resolution, half_width);
  std::mt19937_64 gen(seed);
  const double rmax = 0.95 * half_width / std::numbers::sqrt2;
  for (int i = 0; i < resolution; ++i) {
    const double y = f.coord(i);
    for (int j = 0; j < resolution; ++j) {
      const double x = f.coord(j);
      if (x * x + y * y <= rmax * rmax) f.at(i, j) = uniform01(gen);
    }
  }
  return f;
}

}  // namespace steiner
