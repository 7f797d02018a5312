#include "steiner/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace steiner {

std::vector<std::size_t> placement_order(std::size_t m) {
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Distance to the center c = (m-1)/2, doubled to stay in integers:
  // |2i - (m-1)|. Ties (the equidistant pair) go to the smaller index.
  auto key = [m](std::size_t i) {
    const long long d = 2 * static_cast<long long>(i) -
                        (static_cast<long long>(m) - 1);
    return d < 0 ? -d : d;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return order;
}

void rearrange_line(std::span<const double> src, std::span<double> dst,
                    std::span<const std::size_t> order,
                    std::vector<double>& sorted) {
  sorted.assign(src.begin(), src.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  for (std::size_t r = 0; r < order.size(); ++r) dst[order[r]] = sorted[r];
}

std::vector<double> rearrange_1d(std::span<const double> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i]) || v[i] < 0.0)
      throw std::invalid_argument("rearrange_1d: entry " + std::to_string(i) +
                                  " is negative or not finite");
  std::vector<double> out(v.size());
  std::vector<double> sorted;
  const std::vector<std::size_t> order = placement_order(v.size());
  rearrange_line(v, out, order, sorted);
  return out;
}

}  // namespace steiner
