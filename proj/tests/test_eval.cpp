#include <doctest.h>

#include <cmath>

#include "hfts/eval.hpp"
#include "hfts/sim.hpp"
#include "test_helpers.hpp"

using namespace hfts;
using testutil::grid01;

namespace {

HftsDataset toy_dataset(std::size_t len, double level_a, double level_b, std::size_t g = 9) {
  const Grid grid = grid01(g);
  std::vector<Curve> a(len, Curve::constant(grid, level_a));
  std::vector<Curve> b(len, Curve::constant(grid, level_b));
  std::vector<FtsSeries> leaves{FtsSeries(grid, a, "a"), FtsSeries(grid, b, "b")};
  return HftsDataset::from_leaves(one_level_hierarchy("total", {"a", "b"}), leaves);
}

HftsDataset sv_dataset(std::uint64_t seed, std::size_t len, std::size_t g = 16) {
  const Grid grid = grid01(g);
  Rng rng(seed);
  std::vector<FtsSeries> leaves;
  const double scales[3] = {5.0, 2.0, 3.0};
  const char* names[3] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i)
    leaves.emplace_back(grid, sv_curves(len, grid, scales[i], 0.0, rng).curves, names[i]);
  return HftsDataset::from_leaves(one_level_hierarchy("total", {"x", "y", "z"}), leaves);
}

}  // namespace

TEST_CASE("integrated_error basics") {
  const Grid grid = grid01(21);
  const Curve x = Curve::constant(grid, 3.0);
  CHECK(integrated_error(x, x, ErrorKind::aise) == 0.0);
  CHECK(integrated_error(x, x, ErrorKind::aiae) == 0.0);

  const Curve xhat = Curve::constant(grid, 1.5);
  CHECK(integrated_error(x, xhat, ErrorKind::aise) == doctest::Approx(2.25).epsilon(1e-12));
  CHECK(integrated_error(x, xhat, ErrorKind::aiae) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("integrated_error: linear difference, AIAE exact by trapezoid") {
  const Grid grid(0.0, 1.0, 101);
  std::vector<double> v(101);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = grid.point(i);
  CHECK(integrated_error(Curve(grid, v), Curve::constant(grid, 0.0), ErrorKind::aiae) ==
        doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("integrated_error rejects mismatched grids") {
  CHECK_THROWS_WITH(integrated_error(Curve::constant(grid01(5), 0.0),
                                     Curve::constant(grid01(7), 0.0), ErrorKind::aiae),
                    "grid mismatch");
}

TEST_CASE("errors are unchanged by a constant shift of data and forecasts") {
  Rng rng(71);
  const Curve x = testutil::random_sample(1, 15, rng)[0];
  const Curve xhat = testutil::random_sample(1, 15, rng)[0];
  std::vector<double> xs(x.values), xh(xhat.values);
  for (double& v : xs) v += 42.0;
  for (double& v : xh) v += 42.0;
  for (ErrorKind kind : {ErrorKind::aise, ErrorKind::aiae})
    CHECK(integrated_error(Curve(x.grid, xs), Curve(x.grid, xh), kind) ==
          doctest::Approx(integrated_error(x, xhat, kind)).epsilon(1e-12));
}

TEST_CASE("dataset construction and validation") {
  const HftsDataset ds = toy_dataset(5, 1.0, 2.0);
  CHECK(ds.hierarchy().node_count() == 3);
  CHECK(ds.length() == 5);
  CHECK(testutil::max_abs_diff(ds.series(0).curves[0], Curve::constant(ds.grid(), 3.0)) == 0.0);

  // Validated path accepts the constructed set and rejects a broken root.
  std::vector<FtsSeries> series = ds.all_series();
  CHECK_NOTHROW(HftsDataset::validated(ds.hierarchy(), series));
  series[0].curves[2] = Curve::constant(ds.grid(), 99.0);
  CHECK_THROWS(HftsDataset::validated(ds.hierarchy(), series));
}

TEST_CASE("backtest on a constant dataset gives zero errors and zero MADs") {
  const HftsDataset ds = toy_dataset(20, 1.0, 2.0);
  const PredictorSpec spec{"p1", Proposal1Config{5, LocalityParams(0.5, DepthKind::mbd)}};
  const BacktestReport report = backtest(ds, spec, 5, 19);
  CHECK(report.origins.size() == 15);
  for (const auto& node_errors : report.errors)
    for (double e : node_errors) CHECK(e == 0.0);
  for (double m : report.mad_summary) CHECK(m == 0.0);
}

TEST_CASE("unreconciled backtest equals rolling_forecast composed with the metric") {
  const HftsDataset ds = sv_dataset(73, 40);
  const PredictorSpec spec{"mean", MovingMeanConfig{10}};
  const BacktestReport report = backtest(ds, spec, 10, 39);

  for (std::size_t node = 0; node < ds.hierarchy().node_count(); ++node) {
    const auto pairs = rolling_forecast(ds.series(node), spec.method, 10, 39);
    REQUIRE(pairs.size() == report.errors[node].size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const double want = integrated_error(pairs[i].realized, pairs[i].forecast, ErrorKind::aiae);
      CHECK(report.errors[node][i] == want);
    }
  }
}

TEST_CASE("reconciled backtest keeps the aggregation identity at every origin") {
  const HftsDataset ds = sv_dataset(79, 30);
  const PredictorSpec spec{"mean", MovingMeanConfig{8}};
  BacktestOptions options;
  options.reconciler = Reconciler::gls_robust;
  options.keep_forecasts = true;

  const BacktestReport report = backtest(ds, spec, 8, 29, options);
  CHECK(report.origins.size() == 22);
  // The first origins fall back to identity W and must say so.
  CHECK_FALSE(report.warnings.empty());

  const HierarchySpec& h = ds.hierarchy();
  for (const auto& per_node : report.forecasts) {
    for (std::size_t t = 0; t < ds.grid().n_points; ++t) {
      double sum = 0.0;
      for (std::size_t c : h.children(0)) sum += per_node[c].values[t];
      const double root = per_node[0].values[t];
      CHECK(std::fabs(root - sum) <= 1e-9 * std::max(1.0, std::fabs(root)));
    }
  }
}

TEST_CASE("nonnegative errors and MAD summaries") {
  const HftsDataset ds = sv_dataset(83, 30);
  const PredictorSpec spec{"p1", Proposal1Config{8, LocalityParams(0.45, DepthKind::mbd)}};
  const BacktestReport report = backtest(ds, spec, 8, 29);
  for (const auto& node_errors : report.errors)
    for (double e : node_errors) CHECK(e >= 0.0);
  for (double m : report.mad_summary) CHECK(m >= 0.0);
}

TEST_CASE("compare_predictors: single config equals backtest, duplicates identical") {
  const HftsDataset ds = sv_dataset(89, 25);
  const PredictorSpec spec{"mean", MovingMeanConfig{6}};
  const auto reports = compare_predictors(ds, {spec, spec}, 6, 24);
  REQUIRE(reports.size() == 2);
  const BacktestReport single = backtest(ds, spec, 6, 24);
  for (std::size_t node = 0; node < single.errors.size(); ++node) {
    CHECK(reports[0].errors[node] == single.errors[node]);
    CHECK(reports[0].errors[node] == reports[1].errors[node]);
  }
  CHECK(reports[0].mad_summary == reports[1].mad_summary);
}

TEST_CASE("per-node predictor overrides apply to the named node only") {
  const HftsDataset ds = sv_dataset(101, 30);
  PredictorSpec mixed{"mixed", MovingMeanConfig{6}};
  mixed.node_overrides["total"] = MovingMeanConfig{12};
  const BacktestReport got = backtest(ds, mixed, 12, 29);

  const BacktestReport root_only = backtest(ds, {"m12", MovingMeanConfig{12}}, 12, 29);
  const BacktestReport leaves_only = backtest(ds, {"m6", MovingMeanConfig{6}}, 12, 29);
  CHECK(got.errors[0] == root_only.errors[0]);
  for (std::size_t node = 1; node < 4; ++node) CHECK(got.errors[node] == leaves_only.errors[node]);

  // Overrides tighten the history requirement too.
  CHECK_THROWS(backtest(ds, mixed, 6, 29));
}

TEST_CASE("report layout carries one row per predictor and one column per node") {
  const HftsDataset ds = sv_dataset(97, 25);
  const std::vector<PredictorSpec> specs{
      {"p1", Proposal1Config{6, LocalityParams(0.45, DepthKind::mbd)}},
      {"mean", MovingMeanConfig{6}}};
  const auto reports = compare_predictors(ds, specs, 6, 24);
  REQUIRE(reports.size() == 2);
  for (const BacktestReport& r : reports) {
    CHECK(r.node_ids == std::vector<std::string>{"total", "x", "y", "z"});
    CHECK(r.mad_summary.size() == 4);
    CHECK(r.errors.size() == 4);
  }
  CHECK(reports[0].predictor == "p1");
  CHECK(reports[1].predictor == "mean");
}
