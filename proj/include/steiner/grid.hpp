#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "steiner/angles.hpp"

namespace steiner {

/// A nonnegative function sampled at the cell centers of a uniform n x n
/// grid over [-L, L]^2. Row-major storage; row 0 is the lowest y. Cell
/// centers are (2k+1-n) * (L/n) along each axis, which makes the grid
/// mirror-symmetric bit for bit: coord(n-1-k) == -coord(k) exactly.
class GridFunction {
 public:
  GridFunction(int resolution, double half_width);

  /// Validates every entry (finite, >= 0); size must be resolution^2.
  static GridFunction from_values(int resolution, double half_width,
                                  std::vector<double> values);

  /// Evaluates fn(x, y) at every cell center. A negative or non-finite
  /// sample is an error naming the offending cell.
  static GridFunction sample(const std::function<double(double, double)>& fn,
                             int resolution, double half_width);

  int resolution() const { return n_; }
  double half_width() const { return half_width_; }
  double cell_size() const { return 2.0 * unit_; }

  /// Center coordinate of row/column k.
  double coord(int k) const { return (2 * k + 1 - n_) * unit_; }

  double at(int i, int j) const { return values_[idx(i, j)]; }
  double& at(int i, int j) { return values_[idx(i, j)]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  /// h^2 * sum of samples, summed in ascending value order so the result
  /// depends only on the value multiset.
  double mass() const;

  double max_value() const;

  bool all_finite() const;

  /// Same resolution and identical half_width.
  bool compatible(const GridFunction& o) const {
    return n_ == o.n_ && half_width_ == o.half_width_;
  }

  /// Multiplies every sample by s (s >= 0 and finite).
  void scale(double s);

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_;
  double half_width_;
  double unit_;  // L/n: one half cell
  std::vector<double> values_;
};

/// max over cells of |f - g|. Grids must be compatible.
double sup_distance(const GridFunction& f, const GridFunction& g);

/// Midpoint quadrature of f against the Gaussian e^{-|z|^2}. The cell
/// terms are summed in ascending order, so the value depends only on the
/// term multiset; in particular it is bit-identical under the exact
/// quarter-turn permutations.
double gauss_functional(const GridFunction& f);

/// Rearranges every column (fixed x) into its symmetric decreasing form.
/// Preserves each column's value multiset exactly, hence the mass.
GridFunction steiner_vertical(const GridFunction& f);

/// Rotation by the given angle: output cell z takes the bilinearly
/// interpolated value of f at e^{-i angle} z, zero outside the domain.
/// Quarter-turn multiples are exact index permutations.
GridFunction rotate(const GridFunction& f, const DyadicAngle& angle);

/// Steiner symmetrization along direction angle: rotate by -angle,
/// rearrange columns, rotate back. Requires the support of f inside the
/// centered disk of radius L/sqrt(2), so rotations cannot clip it.
GridFunction steiner_direction(const GridFunction& f,
                               const DyadicAngle& angle);

/// Symmetric decreasing rearrangement about the origin: all samples are
/// sorted descending and refilled in canonical radial order (ascending
/// cell-center radius, ties by row then column). Exactly equimeasurable.
GridFunction rearrange_radial(const GridFunction& f);

/// Cell indices in the canonical radial fill order for an n x n grid.
std::vector<std::size_t> radial_order(int n);

/// Total squared magnitude of the nonzero angular Fourier modes of f,
/// sampled on n_rings circles of radii uniform in (0, L/sqrt(2)] at
/// n_samples equispaced polar angles (bilinear interpolation), summed as
/// a quadrature sum_k sum_{m!=0} |a_m(r_k)|^2 * 2 pi r_k dr. Zero for
/// radial functions up to interpolation noise. n_samples must be a power
/// of two >= 8.
double nonradial_energy(const GridFunction& f, int n_rings, int n_samples);

/// Same quadrature over all angular modes including m = 0; the natural
/// scale for reading nonradial_energy as a relative quantity.
double ring_energy(const GridFunction& f, int n_rings, int n_samples);

/// Radius of the smallest centered disk containing the numerical support
/// of f (cells above a relative floor of 1e-9 times the maximum value).
double support_radius(const GridFunction& f);

struct RadialSample {
  std::size_t rank;
  double radius;
  double value;
};

/// Samples of f listed in the canonical radial fill order; the profile of
/// a rearrange_radial output is non-increasing in rank.
std::vector<RadialSample> radial_profile(const GridFunction& f);

}  // namespace steiner
