#include "hfts/depth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hfts {

std::string to_string(DepthKind k) { return k == DepthKind::cgbd ? "cgbd" : "mbd"; }

DepthKind depth_kind_from_string(const std::string& s) {
  if (s == "cgbd") return DepthKind::cgbd;
  if (s == "mbd") return DepthKind::mbd;
  throw std::invalid_argument("unknown depth kind: " + s);
}

namespace {

void check_depth_inputs(const Curve& x, const FunctionalSample& sample) {
  if (sample.size() < 2) throw std::invalid_argument("need at least two delimiting curves");
  require_same_grid(x, sample);
}

// Grid points where hi - lo >= 0 and lo <= x <= hi, as an integer count.
std::size_t band_count(const std::vector<double>& x, const std::vector<double>& lo,
                       const std::vector<double>& hi) {
  std::size_t count = 0;
  for (std::size_t t = 0; t < x.size(); ++t)
    if (hi[t] >= lo[t] && lo[t] <= x[t] && x[t] <= hi[t]) ++count;
  return count;
}

}  // namespace

double cgbd(const Curve& x, const FunctionalSample& sample) {
  check_depth_inputs(x, sample);
  const std::size_t n = sample.size();
  const std::size_t g = sample.grid.n_points;

  std::size_t total = 0;
  for (std::size_t i1 = 0; i1 + 1 < n; ++i1) {
    const std::vector<double>& a = sample[i1].values;
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
      const std::vector<double>& b = sample[i2].values;
      std::size_t nonneg = 0;  // points with b - a >= 0
      for (std::size_t t = 0; t < g; ++t)
        if (b[t] - a[t] >= 0.0) ++nonneg;
      // Majority orientation; the i1->i2 branch wins an exact split.
      if (2 * nonneg >= g)
        total += band_count(x.values, a, b);
      else
        total += band_count(x.values, b, a);
    }
  }
  return 2.0 * static_cast<double>(total) /
         (static_cast<double>(n) * static_cast<double>(n - 1) * static_cast<double>(g));
}

double mbd(const Curve& x, const FunctionalSample& sample) {
  check_depth_inputs(x, sample);
  const std::size_t n = sample.size();
  const std::size_t g = sample.grid.n_points;

  // Per grid point, a pair envelope misses x(t) exactly when both delimiting
  // values fall strictly on one side, so count those and subtract.
  std::size_t total = 0;
  const std::size_t all_pairs = n * (n - 1) / 2;
  for (std::size_t t = 0; t < g; ++t) {
    const double xv = x.values[t];
    std::size_t below = 0, above = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = sample[i].values[t];
      if (v < xv)
        ++below;
      else if (v > xv)
        ++above;
    }
    total += all_pairs - below * (below - 1) / 2 - above * (above - 1) / 2;
  }
  return static_cast<double>(total) / (static_cast<double>(all_pairs) * static_cast<double>(g));
}

double base_depth(const Curve& x, const FunctionalSample& sample, DepthKind kind) {
  return kind == DepthKind::cgbd ? cgbd(x, sample) : mbd(x, sample);
}

std::vector<double> base_depth_all(const FunctionalSample& sample, DepthKind kind) {
  std::vector<double> out(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) out[i] = base_depth(sample[i], sample, kind);
  return out;
}

namespace {

FunctionalSample symmetrize(const Curve& x, const FunctionalSample& sample) {
  std::vector<Curve> sym;
  sym.reserve(2 * sample.size());
  for (const Curve& c : sample.curves) sym.push_back(c);
  for (const Curve& c : sample.curves) {
    std::vector<double> refl(c.size());
    for (std::size_t t = 0; t < c.size(); ++t) refl[t] = 2.0 * x.values[t] - c.values[t];
    sym.emplace_back(sample.grid, std::move(refl));
  }
  return FunctionalSample(sample.grid, std::move(sym));
}

// Indices of the m deepest entries plus everything tied with the cutoff depth,
// returned in original order.
std::vector<std::size_t> deepest_region(const std::vector<double>& depths, std::size_t m) {
  std::vector<std::size_t> order(depths.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return depths[a] > depths[b]; });
  const double cutoff = depths[order[m - 1]];
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < depths.size(); ++i)
    if (depths[i] >= cutoff) keep.push_back(i);
  return keep;
}

}  // namespace

double local_depth(const Curve& x, const FunctionalSample& sample, const LocalityParams& p) {
  check_depth_inputs(x, sample);
  const std::size_t two_n = 2 * sample.size();
  const auto region_size =
      static_cast<std::size_t>(std::ceil(p.beta * static_cast<double>(two_n)));
  if (region_size < 2) throw std::invalid_argument("locality neighborhood too small");

  const FunctionalSample sym = symmetrize(x, sample);
  std::vector<double> depths(two_n);
  for (std::size_t i = 0; i < two_n; ++i) depths[i] = base_depth(sym[i], sym, p.depth_kind);

  const std::vector<std::size_t> keep = deepest_region(depths, region_size);
  std::vector<Curve> retained;
  retained.reserve(keep.size());
  for (std::size_t i : keep) retained.push_back(sym[i]);
  return base_depth(x, FunctionalSample(sym.grid, std::move(retained)), p.depth_kind);
}

std::vector<double> local_depth_all(const FunctionalSample& sample, const LocalityParams& p) {
  std::vector<double> out(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) out[i] = local_depth(sample[i], sample, p);
  return out;
}

std::pair<std::size_t, Curve> depth_median(const FunctionalSample& sample,
                                           const LocalityParams& p) {
  const std::vector<double> depths = local_depth_all(sample, p);
  std::size_t best = 0;
  bool tied = false;
  for (std::size_t i = 1; i < depths.size(); ++i) {
    if (depths[i] > depths[best]) {
      best = i;
      tied = false;
    } else if (depths[i] == depths[best]) {
      tied = true;
    }
  }
  if (tied) {
    // Exact local-depth ties happen in symmetric configurations (symmetrizing
    // around each member can level the scores); fall back to the depth in the
    // original sample, then to the lowest index.
    const double top = depths[best];
    double best_base = -1.0;
    for (std::size_t i = 0; i < depths.size(); ++i) {
      if (depths[i] != top) continue;
      const double b = base_depth(sample[i], sample, p.depth_kind);
      if (b > best_base) {
        best_base = b;
        best = i;
      }
    }
  }
  return {best, sample[best]};
}

Curve trimmed_local_mean(const FunctionalSample& sample, double alpha, const LocalityParams& p) {
  const std::vector<double> depths = local_depth_all(sample, p);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < depths.size(); ++i)
    if (depths[i] > alpha) keep.push_back(i);
  if (keep.empty()) throw std::invalid_argument("trim level removes entire sample");

  std::vector<double> mean(sample.grid.n_points, 0.0);
  for (std::size_t i : keep)
    for (std::size_t t = 0; t < mean.size(); ++t) mean[t] += sample[i].values[t];
  const double inv = 1.0 / static_cast<double>(keep.size());
  for (double& v : mean) v *= inv;
  return Curve(sample.grid, std::move(mean));
}

FunctionalBoxplot functional_boxplot(const FunctionalSample& sample, DepthKind kind,
                                     double central_prop, double whisker_factor) {
  const std::size_t n = sample.size();
  if (n < 4) throw std::invalid_argument("functional boxplot needs at least 4 curves");
  if (!(central_prop > 0.0 && central_prop <= 1.0))
    throw std::invalid_argument("central proportion must lie in (0,1]");

  const std::vector<double> depths = base_depth_all(sample, kind);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return depths[a] > depths[b]; });
  const auto n_central =
      static_cast<std::size_t>(std::ceil(central_prop * static_cast<double>(n)));

  const std::size_t g = sample.grid.n_points;
  std::vector<double> lo(g), hi(g);
  for (std::size_t t = 0; t < g; ++t) {
    double mn = sample[order[0]].values[t];
    double mx = mn;
    for (std::size_t j = 1; j < n_central; ++j) {
      const double v = sample[order[j]].values[t];
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    lo[t] = mn;
    hi[t] = mx;
  }

  std::vector<double> wlo(g), whi(g);
  for (std::size_t t = 0; t < g; ++t) {
    const double height = hi[t] - lo[t];
    wlo[t] = lo[t] - whisker_factor * height;
    whi[t] = hi[t] + whisker_factor * height;
  }

  std::vector<bool> outlier(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < g; ++t) {
      const double v = sample[i].values[t];
      if (v < wlo[t] || v > whi[t]) {
        outlier[i] = true;
        break;
      }
    }
  }

  return FunctionalBoxplot{Curve(sample.grid, std::move(lo)), Curve(sample.grid, std::move(hi)),
                           Curve(sample.grid, std::move(wlo)), Curve(sample.grid, std::move(whi)),
                           std::move(outlier)};
}

}  // namespace hfts
