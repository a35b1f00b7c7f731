#include "hfts/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hfts {

double integrate(const Curve& c) {
  const std::vector<double>& v = c.values;
  const std::size_t g = v.size();
  double acc = 0.5 * (v.front() + v.back());
  for (std::size_t i = 1; i + 1 < g; ++i) acc += v[i];
  return acc * c.grid.spacing();
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("empty sample");
  const std::size_t n = xs.size();
  const std::size_t mid = n / 2;
  std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
  double hi = xs[mid];
  if (n % 2 == 1) return hi;
  double lo = *std::max_element(xs.begin(), xs.begin() + mid);
  return 0.5 * (lo + hi);
}

double mad(const std::vector<double>& xs, double scale_c) {
  if (xs.empty()) throw std::invalid_argument("empty sample");
  const double med = median(xs);
  std::vector<double> devs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) devs[i] = std::fabs(xs[i] - med);
  return scale_c * median(std::move(devs));
}

}  // namespace hfts
