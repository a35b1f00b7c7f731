#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hfts/curve.hpp"

namespace hfts {

enum class DepthKind { cgbd, mbd };

std::string to_string(DepthKind k);
DepthKind depth_kind_from_string(const std::string& s);

/// Locality level beta in (0,1] together with the base depth it localizes.
struct LocalityParams {
  double beta = 1.0;
  DepthKind depth_kind = DepthKind::cgbd;

  LocalityParams() = default;
  LocalityParams(double b, DepthKind k) : beta(b), depth_kind(k) {
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in (0,1]");
  }
};

/// Corrected generalized band depth of x with respect to the sample.
///
/// Each ordered pair of sample curves delimits a band on the part of the
/// domain where the pair keeps one orientation; the orientation is chosen by
/// the majority rule on the set {t : x_i2(t) - x_i1(t) >= 0}, with the
/// i1->i2 branch taking priority at an exact 1/2 split.
double cgbd(const Curve& x, const FunctionalSample& sample);

/// Modified band depth: mean over curve pairs of the fraction of the domain
/// where x lies inside the pointwise min/max envelope of the pair.
double mbd(const Curve& x, const FunctionalSample& sample);

double base_depth(const Curve& x, const FunctionalSample& sample, DepthKind kind);

/// Depth of every sample member with respect to the whole sample.
std::vector<double> base_depth_all(const FunctionalSample& sample, DepthKind kind);

/// Local depth at locality level beta via sample symmetrization.
///
/// Builds the 2N-curve sample {x_1..x_N, 2x-x_1..2x-x_N}, keeps the smallest
/// depth region holding at least ceil(beta*2N) of those curves (ties at the
/// cutoff depth are all kept), and returns the base depth of x within the
/// retained sub-sample.
double local_depth(const Curve& x, const FunctionalSample& sample, const LocalityParams& p);

std::vector<double> local_depth_all(const FunctionalSample& sample, const LocalityParams& p);

/// Sample member maximizing local depth. Exact ties are resolved by the
/// higher depth in the original sample, then by lowest index.
std::pair<std::size_t, Curve> depth_median(const FunctionalSample& sample,
                                           const LocalityParams& p);

/// Pointwise mean of the sample curves whose local depth strictly exceeds
/// alpha. Throws when the trim level removes every curve.
Curve trimmed_local_mean(const FunctionalSample& sample, double alpha, const LocalityParams& p);

struct FunctionalBoxplot {
  Curve central_lo;
  Curve central_hi;
  Curve whisker_lo;
  Curve whisker_hi;
  std::vector<bool> outlier;  // true = curve exits the whisker band somewhere
};

/// Functional boxplot: central band is the envelope of the deepest
/// ceil(central_prop*N) curves, whiskers inflate it by whisker_factor times
/// the band height pointwise.
FunctionalBoxplot functional_boxplot(const FunctionalSample& sample, DepthKind kind,
                                     double central_prop = 0.5, double whisker_factor = 1.5);

}  // namespace hfts
