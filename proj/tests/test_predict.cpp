#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hfts/predict.hpp"
#include "hfts/rng.hpp"
#include "hfts/sim.hpp"
#include "test_helpers.hpp"

using namespace hfts;
using testutil::grid01;

namespace {

FtsSeries constant_series(std::size_t len, double value, std::size_t g = 11) {
  const Grid grid = grid01(g);
  std::vector<Curve> cs(len, Curve::constant(grid, value));
  return FtsSeries(grid, std::move(cs), "c");
}

FtsSeries series_from(const FunctionalSample& sample) {
  return FtsSeries(sample.grid, sample.curves, "s");
}

}  // namespace

TEST_CASE("forecast_p1 on a constant series returns that curve") {
  const FtsSeries series = constant_series(20, 7.0);
  const Proposal1Config cfg{5, LocalityParams(0.5, DepthKind::mbd)};
  CHECK(forecast_p1(series, cfg, 20) == series.curves[0]);
}

TEST_CASE("forecast_p1 returns the depth median of the window") {
  const FtsSeries series = series_from(testutil::constants({0.0, 1.0, 2.0}));
  const Proposal1Config cfg{3, LocalityParams(1.0, DepthKind::cgbd)};
  CHECK(forecast_p1(series, cfg, 3) == series.curves[1]);

  Rng rng(63);
  const FtsSeries noisy = series_from(testutil::random_sample(12, 9, rng));
  const Proposal1Config cfg2{7, LocalityParams(0.45, DepthKind::mbd)};
  const auto [idx, med] = depth_median(Window(12, 7).slice(noisy), cfg2.locality);
  CHECK(forecast_p1(noisy, cfg2, 12) == med);
}

TEST_CASE("forecast_p1 output is always a window member") {
  Rng rng(61);
  const FtsSeries series = series_from(testutil::random_sample(30, 10, rng));
  const Proposal1Config cfg{8, LocalityParams(0.45, DepthKind::mbd)};
  for (std::size_t n : {8u, 15u, 30u}) {
    const Curve fc = forecast_p1(series, cfg, n);
    bool member = false;
    for (std::size_t i = n - cfg.k; i < n; ++i)
      if (series.curves[i] == fc) member = true;
    CHECK(member);
  }
}

TEST_CASE("forecast_p1 ignores an outlier that replaces a non-median curve") {
  Rng rng(67);
  const Grid grid = grid01(12);
  FunctionalSample window = sv_curves(15, grid, 5.0, 0.0, rng);
  const Proposal1Config cfg{15, LocalityParams(0.45, DepthKind::mbd)};

  const FtsSeries clean = series_from(window);
  const Curve before = forecast_p1(clean, cfg, 15);
  const std::size_t median_idx = depth_median(window, cfg.locality).first;

  const std::size_t victim = median_idx == 0 ? 1 : 0;
  std::vector<Curve> cs = window.curves;
  cs[victim] = Curve::constant(grid, 1e6);
  const Curve after = forecast_p1(series_from(FunctionalSample(grid, cs)), cfg, 15);
  CHECK(before == after);
}

TEST_CASE("forecast_p1 needs enough history") {
  const FtsSeries series = constant_series(4, 0.0);
  const Proposal1Config cfg{5, LocalityParams(1.0, DepthKind::mbd)};
  CHECK_THROWS_WITH(forecast_p1(series, cfg, 4), "window exceeds history");
}

TEST_CASE("forecast_p2 degeneracies in z") {
  Rng rng(71);
  const FtsSeries series = series_from(testutil::random_sample(40, 9, rng));
  Proposal2Config cfg;
  cfg.alpha1 = 0.0;
  cfg.locality1 = LocalityParams(0.6, DepthKind::mbd);
  cfg.k1 = 6;
  cfg.k2 = 8;
  cfg.lag = 10;

  cfg.z = 1.0;
  const Curve recent_only = forecast_p2(series, cfg, 40);
  const Curve recent_mean =
      trimmed_local_mean(Window(40, 6).slice(series), cfg.alpha1, cfg.locality1);
  CHECK(testutil::max_abs_diff(recent_only, recent_mean) <= 1e-12);

  cfg.z = 0.0;
  const Curve older_only = forecast_p2(series, cfg, 40);
  const Curve older_mean =
      trimmed_local_mean(Window(30, 8).slice(series), cfg.alpha1, cfg.locality1);
  CHECK(testutil::max_abs_diff(older_only, older_mean) <= 1e-12);
}

TEST_CASE("forecast_p2 per-window overrides default to the shared settings") {
  Rng rng(149);
  const FtsSeries series = series_from(testutil::random_sample(30, 8, rng));
  Proposal2Config shared;
  shared.z = 0.5;
  shared.alpha1 = 0.1;
  shared.locality1 = LocalityParams(0.6, DepthKind::cgbd);
  shared.k1 = 6;
  shared.k2 = 6;

  Proposal2Config spelled = shared;
  spelled.alpha2 = shared.alpha1;
  spelled.locality2 = shared.locality1;
  CHECK(testutil::max_abs_diff(forecast_p2(series, shared, 30),
                               forecast_p2(series, spelled, 30)) == 0.0);

  // An override applies to the older window only: with z = 0 the forecast is
  // exactly the older window's trimmed mean at the overridden level.
  Proposal2Config overridden = shared;
  overridden.z = 0.0;
  overridden.alpha2 = -1.0;  // keep every curve
  const Curve got = forecast_p2(series, overridden, 30);
  const Curve want = trimmed_local_mean(Window(24, 6).slice(series), -1.0, shared.locality1);
  CHECK(testutil::max_abs_diff(got, want) == 0.0);
}

TEST_CASE("forecast_p2 on a constant series returns the constant") {
  const FtsSeries series = constant_series(25, -3.5);
  Proposal2Config cfg;
  cfg.z = 0.3;
  cfg.locality1 = LocalityParams(0.5, DepthKind::cgbd);
  cfg.k1 = 5;
  cfg.k2 = 5;
  const Curve fc = forecast_p2(series, cfg, 25);
  CHECK(testutil::max_abs_diff(fc, series.curves[0]) <= 1e-12);
}

TEST_CASE("forecast_p2 stays inside the envelope of both windows") {
  Rng rng(73);
  const FtsSeries series = series_from(testutil::random_sample(30, 8, rng));
  Proposal2Config cfg;
  cfg.z = 0.35;
  cfg.locality1 = LocalityParams(0.7, DepthKind::mbd);
  cfg.k1 = 6;
  cfg.k2 = 6;
  const Curve fc = forecast_p2(series, cfg, 30);
  const std::size_t lag = cfg.effective_lag();
  for (std::size_t t = 0; t < fc.size(); ++t) {
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 30 - cfg.k1; i < 30; ++i) {
      lo = std::min(lo, series.curves[i].values[t]);
      hi = std::max(hi, series.curves[i].values[t]);
    }
    for (std::size_t i = 30 - lag - cfg.k2; i < 30 - lag; ++i) {
      lo = std::min(lo, series.curves[i].values[t]);
      hi = std::max(hi, series.curves[i].values[t]);
    }
    CHECK(fc.values[t] >= lo - 1e-12);
    CHECK(fc.values[t] <= hi + 1e-12);
  }
}

TEST_CASE("forecast_mean basics") {
  const Grid grid = grid01(7);
  FtsSeries series(grid, {Curve::constant(grid, 0.0), Curve::constant(grid, 2.0)}, "s");
  CHECK(testutil::max_abs_diff(forecast_mean(series, 2, 2), Curve::constant(grid, 1.0)) == 0.0);

  const FtsSeries same = constant_series(10, 4.0);
  CHECK(forecast_mean(same, 5, 10) == same.curves[0]);
}

TEST_CASE("forecast_mean equals p2 with z=1 and alpha below the minimum depth") {
  Rng rng(79);
  const FtsSeries series = series_from(testutil::random_sample(20, 8, rng));
  Proposal2Config cfg;
  cfg.z = 1.0;
  cfg.alpha1 = -1.0;  // below any depth, so trimming keeps the whole window
  cfg.locality1 = LocalityParams(0.8, DepthKind::mbd);
  cfg.k1 = 7;
  cfg.k2 = 7;
  const Curve p2 = forecast_p2(series, cfg, 20);
  const Curve mean = forecast_mean(series, 7, 20);
  CHECK(testutil::max_abs_diff(p2, mean) <= 1e-12);
}

TEST_CASE("shifting a series by a constant shifts every forecast by it") {
  Rng rng(83);
  const FtsSeries series = series_from(testutil::random_sample(25, 9, rng));
  FtsSeries shifted = series;
  for (Curve& c : shifted.curves) {
    std::vector<double> v = c.values;
    for (double& x : v) x += 10.0;
    c = Curve(series.grid, v);
  }

  const Proposal1Config p1{6, LocalityParams(0.5, DepthKind::mbd)};
  Proposal2Config p2;
  p2.z = 0.4;
  p2.locality1 = LocalityParams(0.5, DepthKind::mbd);
  p2.k1 = 5;
  p2.k2 = 5;

  for (std::size_t t = 0; t < 9; ++t) {
    CHECK(forecast_p1(shifted, p1, 25).values[t] ==
          doctest::Approx(forecast_p1(series, p1, 25).values[t] + 10.0).epsilon(1e-12));
    CHECK(forecast_p2(shifted, p2, 25).values[t] ==
          doctest::Approx(forecast_p2(series, p2, 25).values[t] + 10.0).epsilon(1e-12));
    CHECK(forecast_mean(shifted, 6, 25).values[t] ==
          doctest::Approx(forecast_mean(series, 6, 25).values[t] + 10.0).epsilon(1e-12));
  }
}

TEST_CASE("one window outlier leaves p1 alone but moves the mean without bound") {
  Rng rng(89);
  const Grid grid = grid01(10);
  const FunctionalSample window = sv_curves(15, grid, 2.0, 0.0, rng);
  const FtsSeries clean = series_from(window);
  const Proposal1Config cfg{15, LocalityParams(0.45, DepthKind::mbd)};
  const Curve p1_before = forecast_p1(clean, cfg, 15);
  const Curve mean_before = forecast_mean(clean, 15, 15);
  const std::size_t median_idx = depth_median(window, cfg.locality).first;
  const std::size_t victim = median_idx == 2 ? 3 : 2;

  for (double magnitude : {1e3, 1e6}) {
    std::vector<Curve> cs = window.curves;
    cs[victim] = Curve::constant(grid, magnitude);
    const FtsSeries dirty = series_from(FunctionalSample(grid, cs));

    // The median forecast is unchanged exactly when the argmax index survives
    // the contamination; the mean always absorbs the full (outlier - victim)/k.
    const std::size_t median_after =
        depth_median(FunctionalSample(grid, cs), cfg.locality).first;
    if (median_after == median_idx) CHECK(forecast_p1(dirty, cfg, 15) == p1_before);
    const double shift =
        testutil::max_abs_diff(forecast_mean(dirty, 15, 15), mean_before);
    CHECK(shift >= (magnitude - 50.0) / 15.0);  // grows linearly in the outlier size
  }
}

TEST_CASE("rolling_forecast counts and pairing") {
  const FtsSeries series = constant_series(100, 1.0);
  const PredictorMethod method = Proposal1Config{15, LocalityParams(0.45, DepthKind::mbd)};
  const auto pairs = rolling_forecast(series, method, 15, 99);
  CHECK(pairs.size() == 85);
  CHECK(pairs.front().origin == 15);
  CHECK(pairs.back().origin == 99);
  for (const ForecastPair& p : pairs) CHECK(testutil::max_abs_diff(p.forecast, p.realized) == 0.0);
}

TEST_CASE("rolling_forecast over the two-regime appendix layout") {
  // 150 curves, width-15 windows: origins 15..149 give N-15 realized pairs;
  // the window ending at 150 is the (N-15+1)-th, usable only as a forecast.
  Rng rng(97);
  const Grid grid(0.0, 1.0, 24);
  const FunctionalSample sample =
      two_regime_sample(150, 3000, 7000, 5.0, 0.0, 1.0, 25.0, grid, rng);
  const FtsSeries series = series_from(sample);
  const PredictorMethod method = Proposal1Config{15, LocalityParams(0.45, DepthKind::mbd)};
  const auto pairs = rolling_forecast(series, method, 15, 149);
  CHECK(pairs.size() == 150 - 15);
  CHECK_NOTHROW(forecast(series, method, 150));
}

TEST_CASE("rolling_forecast names the violating origin") {
  const FtsSeries series = constant_series(20, 0.0);
  const PredictorMethod method = MovingMeanConfig{10};
  CHECK_THROWS_WITH(rolling_forecast(series, method, 9, 12),
                    "origin 9 violates the predictor history requirement");
  CHECK_THROWS_WITH(rolling_forecast(series, method, 10, 20),
                    "origin 20 has no realized successor");
}
