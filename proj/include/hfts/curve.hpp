#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfts {

/// Uniform evaluation grid shared by all curves in a computation.
struct Grid {
  double t_start = 0.0;
  double t_end = 1.0;
  std::size_t n_points = 2;

  Grid() = default;
  Grid(double t0, double t1, std::size_t g) : t_start(t0), t_end(t1), n_points(g) { validate(); }
  explicit Grid(double t1, std::size_t g) : Grid(0.0, t1, g) {}

  void validate() const {
    if (n_points < 2) throw std::invalid_argument("grid needs at least 2 points");
    if (!(t_end > t_start)) throw std::invalid_argument("grid t_end must exceed t_start");
  }

  double length() const { return t_end - t_start; }
  double spacing() const { return length() / static_cast<double>(n_points - 1); }
  double point(std::size_t i) const { return t_start + spacing() * static_cast<double>(i); }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.t_start == b.t_start && a.t_end == b.t_end && a.n_points == b.n_points;
  }
};

/// One functional observation sampled on a grid.
struct Curve {
  Grid grid;
  std::vector<double> values;

  Curve() = default;
  Curve(Grid g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.n_points)
      throw std::invalid_argument("curve length does not match grid");
    for (double x : values)
      if (!std::isfinite(x)) throw std::invalid_argument("curve contains non-finite value");
  }

  static Curve constant(const Grid& g, double c) {
    return Curve(g, std::vector<double>(g.n_points, c));
  }

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.grid == b.grid && a.values == b.values;
  }
};

/// Ordered collection of curves on one shared grid.
struct FunctionalSample {
  Grid grid;
  std::vector<Curve> curves;

  FunctionalSample() = default;
  FunctionalSample(Grid g, std::vector<Curve> cs) : grid(g), curves(std::move(cs)) {
    if (curves.empty()) throw std::invalid_argument("sample needs at least one curve");
    for (const Curve& c : curves)
      if (!(c.grid == grid)) throw std::invalid_argument("grid mismatch");
  }

  std::size_t size() const { return curves.size(); }
  const Curve& operator[](std::size_t i) const { return curves[i]; }
};

inline void require_same_grid(const Curve& a, const Curve& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("grid mismatch");
}

inline void require_same_grid(const Curve& x, const FunctionalSample& s) {
  if (!(x.grid == s.grid)) throw std::invalid_argument("grid mismatch");
}

}  // namespace hfts
