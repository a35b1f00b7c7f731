// Independent reference implementations used only by tests. They enumerate
// pairs, grid points and matrix entries literally from the definitions and
// must stay decoupled from the library code paths they check.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hfts/curve.hpp"

namespace oracle {

// Corrected generalized band depth by direct set construction: for each pair
// build a(i1,i2) as an explicit index set, pick the branch by its measure and
// count the points of the band set.
inline double cgbd(const hfts::Curve& x, const hfts::FunctionalSample& sample) {
  const std::size_t n = sample.size();
  const std::size_t g = sample.grid.n_points;
  double sum = 0.0;
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
      const auto& c1 = sample[i1].values;
      const auto& c2 = sample[i2].values;
      std::vector<std::size_t> a12, a21;
      for (std::size_t t = 0; t < g; ++t) {
        if (c2[t] - c1[t] >= 0.0) a12.push_back(t);
        if (c1[t] - c2[t] >= 0.0) a21.push_back(t);
      }
      const double l12 = static_cast<double>(a12.size()) / static_cast<double>(g);
      const double l21 = static_cast<double>(a21.size()) / static_cast<double>(g);
      std::size_t measure = 0;
      if (l12 >= 0.5) {
        for (std::size_t t : a12)
          if (c1[t] <= x.values[t] && x.values[t] <= c2[t]) ++measure;
      } else if (l21 > 0.5) {
        for (std::size_t t : a21)
          if (c2[t] <= x.values[t] && x.values[t] <= c1[t]) ++measure;
      }
      sum += static_cast<double>(measure) / static_cast<double>(g);
    }
  }
  return 2.0 / (static_cast<double>(n) * static_cast<double>(n - 1)) * sum;
}

// Modified band depth by direct envelope membership.
inline double mbd(const hfts::Curve& x, const hfts::FunctionalSample& sample) {
  const std::size_t n = sample.size();
  const std::size_t g = sample.grid.n_points;
  double sum = 0.0;
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
      const auto& c1 = sample[i1].values;
      const auto& c2 = sample[i2].values;
      std::size_t count = 0;
      for (std::size_t t = 0; t < g; ++t) {
        const double lo = std::min(c1[t], c2[t]);
        const double hi = std::max(c1[t], c2[t]);
        if (lo <= x.values[t] && x.values[t] <= hi) ++count;
      }
      sum += static_cast<double>(count) / static_cast<double>(g);
    }
  }
  return 2.0 / (static_cast<double>(n) * static_cast<double>(n - 1)) * sum;
}

// Dense solve of (S^T W^-1 S) b = S^T W^-1 r at one grid point, assembled by
// index loops and solved with partially pivoted Gaussian elimination.
inline std::vector<double> gls_point(const std::vector<std::vector<double>>& s,
                                     const std::vector<double>& w_diag,
                                     const std::vector<double>& r) {
  const std::size_t rows = s.size();
  const std::size_t cols = s.front().size();
  std::vector<std::vector<double>> a(cols, std::vector<double>(cols, 0.0));
  std::vector<double> b(cols, 0.0);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < rows; ++k) a[i][j] += s[k][i] * s[k][j] / w_diag[k];
    for (std::size_t k = 0; k < rows; ++k) b[i] += s[k][i] * r[k] / w_diag[k];
  }
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < cols; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    if (a[col][col] == 0.0) throw std::runtime_error("singular oracle system");
    for (std::size_t row = col + 1; row < cols; ++row) {
      const double f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < cols; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  std::vector<double> out(cols, 0.0);
  for (std::size_t i = cols; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < cols; ++j) acc -= a[i][j] * out[j];
    out[i] = acc / a[i][i];
  }
  return out;
}

}  // namespace oracle
