#include "steiner/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "steiner/rearrange.hpp"

namespace steiner {

namespace {

void check_resolution(int n) {
  if (n <= 0) throw std::invalid_argument("GridFunction: resolution must be positive");
}

void check_half_width(double l) {
  if (!(l > 0.0) || !std::isfinite(l))
    throw std::invalid_argument("GridFunction: half_width must be positive and finite");
}

}  // namespace

GridFunction::GridFunction(int resolution, double half_width)
    : n_(resolution), half_width_(half_width), unit_(half_width / resolution),
      values_(static_cast<std::size_t>(resolution) * resolution, 0.0) {
  check_resolution(resolution);
  check_half_width(half_width);
}

GridFunction GridFunction::from_values(int resolution, double half_width,
                                       std::vector<double> values) {
  GridFunction f(resolution, half_width);
  if (values.size() != f.values_.size())
    throw std::invalid_argument("GridFunction: value count does not match resolution");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]) || values[i] < 0.0)
      throw std::invalid_argument("GridFunction: entry " + std::to_string(i) +
                                  " is negative or not finite");
  f.values_ = std::move(values);
  return f;
}

GridFunction GridFunction::sample(
    const std::function<double(double, double)>& fn, int resolution,
    double half_width) {
  GridFunction f(resolution, half_width);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const double x = f.coord(j);
      const double y = f.coord(i);
      const double v = fn(x, y);
      if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument(
            "sample: value at cell (" + std::to_string(i) + ", " +
            std::to_string(j) + "), center (" + std::to_string(x) + ", " +
            std::to_string(y) + "), is negative or not finite");
      f.at(i, j) = v;
    }
  }
  return f;
}

double GridFunction::mass() const {
  std::vector<double> sorted(values_);
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (double v : sorted) sum += v;
  const double h = cell_size();
  return h * h * sum;
}

double GridFunction::max_value() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, v);
  return m;
}

bool GridFunction::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

void GridFunction::scale(double s) {
  if (!std::isfinite(s) || s < 0.0)
    throw std::invalid_argument("GridFunction::scale: factor must be nonnegative and finite");
  for (double& v : values_) v *= s;
}

double sup_distance(const GridFunction& f, const GridFunction& g) {
  if (!f.compatible(g))
    throw std::invalid_argument("sup_distance: incompatible grids");
  double m = 0.0;
  const auto fv = f.values();
  const auto gv = g.values();
  for (std::size_t i = 0; i < fv.size(); ++i)
    m = std::max(m, std::fabs(fv[i] - gv[i]));
  return m;
}

double gauss_functional(const GridFunction& f) {
  const int n = f.resolution();
  // The grid's mirror symmetry makes the weight bit-identical on cells
  // related by quarter turns or axis reflections, and the terms are
  // summed in ascending order, so the value depends only on the product
  // multiset. Exact rearrangements therefore change J deterministically:
  // quarter-turn rotations keep it bit for bit, and relocating values
  // between equal-weight cells cannot move it at all.
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double yi = f.coord(i);
    for (int j = 0; j < n; ++j) {
      const double xj = f.coord(j);
      terms.push_back(f.at(i, j) * std::exp(-(yi * yi + xj * xj)));
    }
  }
  std::sort(terms.begin(), terms.end());
  double total = 0.0;
  for (double t : terms) total += t;
  const double h = f.cell_size();
  return h * h * total;
}

GridFunction steiner_vertical(const GridFunction& f) {
  const int n = f.resolution();
  GridFunction out(n, f.half_width());
  const std::vector<std::size_t> order = placement_order(n);
  std::vector<double> column(n);
  std::vector<double> packed(n);
  std::vector<double> sorted;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) column[i] = f.at(i, j);
    rearrange_line(column, packed, order, sorted);
    for (int i = 0; i < n; ++i) out.at(i, j) = packed[i];
  }
  return out;
}

namespace {

double bilinear(const GridFunction& f, double x, double y) {
  const int n = f.resolution();
  const double h = f.cell_size();
  // Fractional cell indices of the sample point.
  const double gx = (x - f.coord(0)) / h;
  const double gy = (y - f.coord(0)) / h;
  const int j0 = static_cast<int>(std::floor(gx));
  const int i0 = static_cast<int>(std::floor(gy));
  const double fx = gx - j0;
  const double fy = gy - i0;
  auto v = [&](int i, int j) {
    if (i < 0 || i >= n || j < 0 || j >= n) return 0.0;
    return f.at(i, j);
  };
  return (1.0 - fy) * ((1.0 - fx) * v(i0, j0) + fx * v(i0, j0 + 1)) +
         fy * ((1.0 - fx) * v(i0 + 1, j0) + fx * v(i0 + 1, j0 + 1));
}

GridFunction rotate_quarter(const GridFunction& f, int q) {
  const int n = f.resolution();
  GridFunction out(n, f.half_width());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v;
      switch (q) {
        case 1: v = f.at(n - 1 - j, i); break;
        case 2: v = f.at(n - 1 - i, n - 1 - j); break;
        case 3: v = f.at(j, n - 1 - i); break;
        default: v = f.at(i, j); break;
      }
      out.at(i, j) = v;
    }
  }
  return out;
}

}  // namespace

GridFunction rotate(const GridFunction& f, const DyadicAngle& angle) {
  if (angle.quarter_multiple()) return rotate_quarter(f, angle.quarter_index());
  const int n = f.resolution();
  GridFunction out(n, f.half_width());
  const double rad = angle.radians();
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  for (int i = 0; i < n; ++i) {
    const double y = f.coord(i);
    for (int j = 0; j < n; ++j) {
      const double x = f.coord(j);
      // e^{-i angle} (x + iy)
      const double xs = x * c + y * s;
      const double ys = y * c - x * s;
      out.at(i, j) = bilinear(f, xs, ys);
    }
  }
  return out;
}

GridFunction steiner_direction(const GridFunction& f,
                               const DyadicAngle& angle) {
  const double limit = f.half_width() / std::numbers::sqrt2;
  const double r = support_radius(f);
  if (r > limit)
    throw std::domain_error(
        "steiner_direction: support radius " + std::to_string(r) +
        " exceeds half_width/sqrt(2) = " + std::to_string(limit) +
        "; rotation would clip the support");
  return rotate(steiner_vertical(rotate(f, angle.negated())), angle);
}

std::vector<std::size_t> radial_order(int n) {
  check_resolution(n);
  struct Key {
    long long r2;
    int i;
    int j;
  };
  std::vector<Key> keys;
  keys.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Doubled center offsets keep the radius comparison in integers.
      const long long u = 2 * j + 1 - n;
      const long long v = 2 * i + 1 - n;
      keys.push_back({u * u + v * v, i, j});
    }
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.r2 != b.r2) return a.r2 < b.r2;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<std::size_t> order(keys.size());
  for (std::size_t t = 0; t < keys.size(); ++t)
    order[t] = static_cast<std::size_t>(keys[t].i) * n + keys[t].j;
  return order;
}

GridFunction rearrange_radial(const GridFunction& f) {
  const int n = f.resolution();
  GridFunction out(n, f.half_width());
  std::vector<double> sorted(f.values().begin(), f.values().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  const std::vector<std::size_t> order = radial_order(n);
  auto ov = out.values();
  for (std::size_t t = 0; t < order.size(); ++t) ov[order[t]] = sorted[t];
  return out;
}

namespace {

double angular_spectrum_sum(const GridFunction& f, int n_rings, int n_samples,
                            bool include_dc) {
  if (n_rings <= 0)
    throw std::invalid_argument("nonradial_energy: n_rings must be positive");
  if (n_samples < 8 || (n_samples & (n_samples - 1)) != 0)
    throw std::invalid_argument(
        "nonradial_energy: n_samples must be a power of two >= 8");
  const int m = n_samples;
  std::vector<double> cos_t(m), sin_t(m);
  for (int u = 0; u < m; ++u) {
    const double phi = 2.0 * std::numbers::pi * u / m;
    cos_t[u] = std::cos(phi);
    sin_t[u] = std::sin(phi);
  }
  const double rmax = f.half_width() / std::numbers::sqrt2;
  const double dr = rmax / n_rings;
  std::vector<double> ring(m);
  double total = 0.0;
  for (int t = 0; t < n_rings; ++t) {
    const double r = (t + 1) * dr;
    for (int u = 0; u < m; ++u)
      ring[u] = bilinear(f, r * cos_t[u], r * sin_t[u]);
    // a_k = (1/m) sum_u ring[u] e^{-i k phi_u}
    double energy = 0.0;
    for (int k = include_dc ? 0 : 1; k < m; ++k) {
      double re = 0.0, im = 0.0;
      for (int u = 0; u < m; ++u) {
        const int idx = static_cast<int>((static_cast<long long>(k) * u) % m);
        re += ring[u] * cos_t[idx];
        im -= ring[u] * sin_t[idx];
      }
      energy += (re * re + im * im) / (static_cast<double>(m) * m);
    }
    total += energy * 2.0 * std::numbers::pi * r * dr;
  }
  return total;
}

}  // namespace

double nonradial_energy(const GridFunction& f, int n_rings, int n_samples) {
  return angular_spectrum_sum(f, n_rings, n_samples, false);
}

double ring_energy(const GridFunction& f, int n_rings, int n_samples) {
  return angular_spectrum_sum(f, n_rings, n_samples, true);
}

double support_radius(const GridFunction& f) {
  const double floor = f.max_value() * 1e-9;
  const int n = f.resolution();
  double r2 = -1.0;
  for (int i = 0; i < n; ++i) {
    const double y = f.coord(i);
    for (int j = 0; j < n; ++j) {
      if (f.at(i, j) > floor) {
        const double x = f.coord(j);
        r2 = std::max(r2, x * x + y * y);
      }
    }
  }
  return r2 < 0.0 ? 0.0 : std::sqrt(r2);
}

std::vector<RadialSample> radial_profile(const GridFunction& f) {
  const int n = f.resolution();
  const std::vector<std::size_t> order = radial_order(n);
  const auto fv = f.values();
  std::vector<RadialSample> profile;
  profile.reserve(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    const int i = static_cast<int>(order[t] / n);
    const int j = static_cast<int>(order[t] % n);
    const double x = f.coord(j);
    const double y = f.coord(i);
    profile.push_back({t, std::sqrt(x * x + y * y), fv[order[t]]});
  }
  return profile;
}

}  // namespace steiner
