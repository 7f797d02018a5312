#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace steiner {

/// Canonical center-out order for a line of m uniformly spaced samples:
/// indices sorted by distance from the center c = (m-1)/2, the equidistant
/// pair resolved toward the smaller index. The r-th entry is the index
/// that receives the r-th largest value.
std::vector<std::size_t> placement_order(std::size_t m);

/// Symmetric decreasing rearrangement of a sampled line: sorts the values
/// descending and deposits them along placement_order(m). The output has
/// exactly the input's value multiset and is non-increasing away from the
/// center. Rejects negative or non-finite entries.
std::vector<double> rearrange_1d(std::span<const double> v);

/// Rearranges src into dst (same length as order) using a precomputed
/// placement order; sorted is scratch space. No validation. This is the
/// kernel the grid operations loop over.
void rearrange_line(std::span<const double> src, std::span<double> dst,
                    std::span<const std::size_t> order,
                    std::vector<double>& sorted);

}  // namespace steiner
