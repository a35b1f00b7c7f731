#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hfts/depth.hpp"
#include "hfts/predict.hpp"
#include "hfts/rng.hpp"

namespace hfts {

/// Stochastic volatility recursion parameters.
struct SvParams {
  double gamma = 0.0;
  double fi = 0.2;     // log-volatility persistence; |fi| < 1 recommended
  double sigma = 0.5;  // log-volatility shock scale
  double delta = 0.1;  // log-volatility noise sd

  bool stationary() const { return fi > -1.0 && fi < 1.0; }
};

/// SV path of length n: run the log-volatility recursion for 2n steps from a
/// standard-normal start, keep the last n volatilities, and scale i.i.d.
/// standard normals by their square roots.
std::vector<double> sv_path(std::size_t n, const SvParams& p, Rng& rng);

/// n_curves independent curves a * SV(G, 0, 0.3, 0.5, 0.1) + b.
FunctionalSample sv_curves(std::size_t n_curves, const Grid& grid, double a, double b, Rng& rng);

/// Draw eps curves without replacement (order randomized) from the pool of
/// m regime-(a,b) curves stacked over n regime-(c,d) curves.
FunctionalSample two_regime_sample(std::size_t eps, std::size_t m, std::size_t n, double a,
                                   double b, double c, double d, const Grid& grid, Rng& rng);

/// FAR(1) driven by the separable Gaussian kernel C*exp(-(t^2+s^2)/2) with
/// C normalized so the discretized operator norm equals rho, plus sine-cosine
/// errors with standard-normal amplitudes.
struct Far1Params {
  Grid grid{1.0, 120};
  double rho = 0.5;  // target operator norm; >= 1 is allowed but nonstationary
  int freq_sin = 1;
  int freq_cos = 1;
  double scale_sin = 1.0;
  double scale_cos = 1.0;
};

struct Far1Result {
  FtsSeries series;
  double kernel_scale = 0.0;  // the normalized C actually used
  bool nonstationary = false; // rho >= 1
};

Far1Result far1_series(std::size_t n_curves, const Far1Params& p, Rng& rng);

enum class ClassicalKind { wiener, brownian_bridge };

/// Wiener paths from 0 with N(0, h) increments, or the matching bridge
/// (path minus (t/T) times its endpoint).
FunctionalSample classical_paths(ClassicalKind kind, std::size_t n_curves, const Grid& grid,
                                 Rng& rng);

/// Textbook GARCH(1,1) returns: sigma2[t] = omega + alpha*x[t-1]^2 +
/// beta*sigma2[t-1], x[t] = sqrt(sigma2[t]) * N(0,1).
struct GarchParams {
  double omega = 0.1;
  double alpha = 0.1;
  double beta = 0.8;
};

std::vector<double> garch_path(std::size_t n, const GarchParams& p, Rng& rng);

struct OutlierInjection {
  FtsSeries contaminated;
  std::vector<std::size_t> indices;  // which curves were replaced
};

/// Replace ceil(proportion * N) randomly chosen curves by size outliers placed
/// `magnitude` band heights beyond the functional-boxplot whiskers (sign
/// randomized per curve). Every injected curve is verified to be flagged by
/// the boxplot of the contaminated sample.
OutlierInjection inject_outliers(const FtsSeries& series, double proportion, double magnitude,
                                 DepthKind kind, Rng& rng);

}  // namespace hfts
