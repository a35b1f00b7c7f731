#include "hfts/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hfts/numeric.hpp"

namespace hfts {

std::vector<double> sv_path(std::size_t n, const SvParams& p, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sv_path needs n >= 1");

  std::vector<double> epsilon(n);
  for (double& e : epsilon) e = rng.normal();
  std::vector<double> eta(2 * n);
  for (double& e : eta) e = rng.normal(0.0, p.delta);

  std::vector<double> h(2 * n);
  h[0] = rng.normal();
  for (std::size_t t = 1; t < 2 * n; ++t)
    h[t] = std::exp(p.gamma + p.fi * (h[t - 1] - p.gamma) + p.sigma * eta[t]);

  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::sqrt(h[n + i]) * epsilon[i];
  return z;
}

namespace {

Curve sv_curve(const Grid& grid, double a, double b, Rng& rng) {
  const SvParams inner{0.0, 0.3, 0.5, 0.1};
  std::vector<double> v = sv_path(grid.n_points, inner, rng);
  for (double& x : v) x = a * x + b;
  return Curve(grid, std::move(v));
}

}  // namespace

FunctionalSample sv_curves(std::size_t n_curves, const Grid& grid, double a, double b, Rng& rng) {
  if (n_curves < 1) throw std::invalid_argument("need at least one curve");
  const std::uint64_t base = rng.next_u64();
  std::vector<Curve> cs;
  cs.reserve(n_curves);
  for (std::size_t i = 0; i < n_curves; ++i) {
    Rng sub(mix_seed(base ^ mix_seed(i)));
    cs.push_back(sv_curve(grid, a, b, sub));
  }
  return FunctionalSample(grid, std::move(cs));
}

FunctionalSample two_regime_sample(std::size_t eps, std::size_t m, std::size_t n, double a,
                                   double b, double c, double d, const Grid& grid, Rng& rng) {
  const std::size_t pool = m + n;
  if (eps > pool) throw std::invalid_argument("cannot draw more curves than the pool holds");
  if (eps < 1) throw std::invalid_argument("need at least one curve");

  // Partial Fisher-Yates gives the first eps entries of a random permutation.
  std::vector<std::size_t> idx(pool);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < eps; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool - i));
    std::swap(idx[i], idx[j]);
  }

  // Each pool position has its own substream, so only selected curves are
  // ever generated and the draw matches generating the full pool up front.
  const std::uint64_t base = rng.next_u64();
  std::vector<Curve> cs;
  cs.reserve(eps);
  for (std::size_t i = 0; i < eps; ++i) {
    const std::size_t j = idx[i];
    Rng sub(mix_seed(base ^ mix_seed(j)));
    cs.push_back(j < m ? sv_curve(grid, a, b, sub) : sv_curve(grid, c, d, sub));
  }
  return FunctionalSample(grid, std::move(cs));
}

Far1Result far1_series(std::size_t n_curves, const Far1Params& p, Rng& rng) {
  if (n_curves < 2) throw std::invalid_argument("FAR(1) series needs at least 2 curves");
  const Grid& grid = p.grid;
  const std::size_t g = grid.n_points;

  // The kernel is rank one: psi(t,s) = C g(t) g(s) with g(t) = exp(-t^2/2),
  // so the discretized L2 operator norm is C * integral of g^2 and the target
  // norm rho fixes C in closed form.
  std::vector<double> shape(g);
  for (std::size_t t = 0; t < g; ++t) {
    const double tv = grid.point(t);
    shape[t] = std::exp(-0.5 * tv * tv);
  }
  std::vector<double> shape_sq(g);
  for (std::size_t t = 0; t < g; ++t) shape_sq[t] = shape[t] * shape[t];
  const double norm_g2 = integrate(Curve(grid, shape_sq));
  const double kernel_scale = p.rho / norm_g2;

  constexpr double two_pi = 6.283185307179586476925286766559;
  auto noise = [&](Rng& r) {
    const double amp_sin = r.normal() * p.scale_sin;
    const double amp_cos = r.normal() * p.scale_cos;
    std::vector<double> e(g);
    for (std::size_t t = 0; t < g; ++t) {
      const double tv = grid.point(t);
      e[t] = amp_sin * std::sin(two_pi * tv * p.freq_sin) +
             amp_cos * std::cos(two_pi * tv * p.freq_cos);
    }
    return e;
  };

  std::vector<Curve> cs;
  cs.reserve(n_curves);
  cs.emplace_back(grid, noise(rng));
  for (std::size_t i = 1; i < n_curves; ++i) {
    // <g, X_{i-1}> by trapezoid, then X_i(t) = C g(t) <g, X> + eps_i(t).
    std::vector<double> prod(g);
    for (std::size_t t = 0; t < g; ++t) prod[t] = shape[t] * cs.back().values[t];
    const double inner = integrate(Curve(grid, prod));
    std::vector<double> next = noise(rng);
    for (std::size_t t = 0; t < g; ++t) next[t] += kernel_scale * shape[t] * inner;
    cs.emplace_back(grid, std::move(next));
  }

  Far1Result out{FtsSeries(grid, std::move(cs)), kernel_scale, p.rho >= 1.0};
  return out;
}

FunctionalSample classical_paths(ClassicalKind kind, std::size_t n_curves, const Grid& grid,
                                 Rng& rng) {
  if (n_curves < 1) throw std::invalid_argument("need at least one curve");
  const std::size_t g = grid.n_points;
  const double sd = std::sqrt(grid.spacing());
  const std::uint64_t base = rng.next_u64();

  std::vector<Curve> cs;
  cs.reserve(n_curves);
  for (std::size_t i = 0; i < n_curves; ++i) {
    Rng sub(mix_seed(base ^ mix_seed(i)));
    std::vector<double> v(g);
    v[0] = 0.0;
    for (std::size_t t = 1; t < g; ++t) v[t] = v[t - 1] + sub.normal(0.0, sd);
    if (kind == ClassicalKind::brownian_bridge) {
      const double endpoint = v[g - 1];
      const double span = grid.length();
      for (std::size_t t = 0; t < g; ++t)
        v[t] -= (grid.point(t) - grid.t_start) / span * endpoint;
    }
    cs.emplace_back(grid, std::move(v));
  }
  return FunctionalSample(grid, std::move(cs));
}

std::vector<double> garch_path(std::size_t n, const GarchParams& p, Rng& rng) {
  if (n < 1) throw std::invalid_argument("garch_path needs n >= 1");
  if (p.omega <= 0.0 || p.alpha < 0.0 || p.beta < 0.0)
    throw std::invalid_argument("invalid GARCH parameters");
  // Start the variance recursion at its stationary mean when it exists.
  const double persist = p.alpha + p.beta;
  double sigma2 = persist < 1.0 ? p.omega / (1.0 - persist) : p.omega;
  std::vector<double> x(n);
  for (std::size_t t = 0; t < n; ++t) {
    x[t] = std::sqrt(sigma2) * rng.normal();
    sigma2 = p.omega + p.alpha * x[t] * x[t] + p.beta * sigma2;
  }
  return x;
}

OutlierInjection inject_outliers(const FtsSeries& series, double proportion, double magnitude,
                                 DepthKind kind, Rng& rng) {
  if (!(proportion > 0.0 && proportion < 1.0))
    throw std::invalid_argument("proportion must lie in (0,1)");
  const std::size_t n = series.size();
  const auto n_out = static_cast<std::size_t>(std::ceil(proportion * static_cast<double>(n)));

  const FunctionalSample sample(series.grid, series.curves);
  const FunctionalBoxplot box = functional_boxplot(sample, kind);
  const std::size_t g = series.grid.n_points;

  double max_height = 0.0;
  for (std::size_t t = 0; t < g; ++t)
    max_height = std::max(max_height, box.central_hi.values[t] - box.central_lo.values[t]);
  if (max_height <= 0.0) throw std::invalid_argument("cannot construct size outlier");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < n_out; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(n_out);
  std::sort(idx.begin(), idx.end());

  FtsSeries out = series;
  for (std::size_t i : idx) {
    const bool above = rng.uniform01() < 0.5;
    // Per-curve offset draw keeps the injected curves distinct; exact
    // duplicates would otherwise receive inflated band-depth scores.
    const double offset = magnitude * (1.0 + rng.uniform01());
    std::vector<double> v(g);
    for (std::size_t t = 0; t < g; ++t) {
      const double height = box.central_hi.values[t] - box.central_lo.values[t];
      v[t] = above ? box.whisker_hi.values[t] + offset * height
                   : box.whisker_lo.values[t] - offset * height;
    }
    out.curves[i] = Curve(series.grid, std::move(v));
  }

  const FunctionalBoxplot check = functional_boxplot(FunctionalSample(out.grid, out.curves), kind);
  for (std::size_t i : idx)
    if (!check.outlier[i])
      throw std::runtime_error("injected curve " + std::to_string(i) +
                               " is not flagged as an outlier");

  return OutlierInjection{std::move(out), std::move(idx)};
}

}  // namespace hfts
