#pragma once

#include <cstddef>
#include <vector>

#include "hfts/curve.hpp"

namespace hfts {

/// Default consistency constant making the MAD estimate Gaussian scale.
inline constexpr double kMadGaussianConsistency = 1.4826;

/// Trapezoid-rule integral of a curve over its grid interval.
double integrate(const Curve& c);

/// Fraction of grid points (count / G) satisfying the predicate on indices.
/// This is the fixed discretization of domain-measure ratios used everywhere.
template <class Pred>
double fraction_where(const Grid& grid, Pred&& pred) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < grid.n_points; ++i)
    if (pred(i)) ++count;
  return static_cast<double>(count) / static_cast<double>(grid.n_points);
}

/// Median; an even-length input yields the midpoint of the two central order
/// statistics. Input is taken by value because it gets partially sorted.
double median(std::vector<double> xs);

/// scale_c * median(|x_i - median(xs)|). Throws on empty input.
double mad(const std::vector<double>& xs, double scale_c = kMadGaussianConsistency);

}  // namespace hfts
