#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hfts/depth.hpp"

namespace hfts {

/// Functional time series: one curve per time index for a named cluster.
struct FtsSeries {
  Grid grid;
  std::vector<Curve> curves;  // index = period, time-ordered
  std::string cluster_id;

  FtsSeries() = default;
  FtsSeries(Grid g, std::vector<Curve> cs, std::string id = {})
      : grid(g), curves(std::move(cs)), cluster_id(std::move(id)) {
    for (const Curve& c : curves)
      if (!(c.grid == grid)) throw std::invalid_argument("grid mismatch");
  }

  std::size_t size() const { return curves.size(); }
};

/// Moving window of `length` observations ending at 1-based index `end`.
struct Window {
  std::size_t end = 0;
  std::size_t length = 0;

  Window(std::size_t n, std::size_t k) : end(n), length(k) {
    if (length < 2) throw std::invalid_argument("window length must be at least 2");
    if (length > end) throw std::invalid_argument("window exceeds history");
  }

  FunctionalSample slice(const FtsSeries& series) const;
};

/// Moving local-median predictor.
struct Proposal1Config {
  std::size_t k = 15;
  LocalityParams locality{};
};

/// Two-window trimmed local mean with forgetting weight z; the older window
/// ends lag observations before the recent one (default lag = k1, adjacent
/// non-overlapping windows).
struct Proposal2Config {
  double z = 0.5;
  double alpha1 = 0.0;
  LocalityParams locality1{};
  std::size_t k1 = 15;
  std::size_t k2 = 15;
  std::optional<std::size_t> lag{};
  std::optional<double> alpha2{};          // per-window override, defaults to alpha1
  std::optional<LocalityParams> locality2{};  // per-window override, defaults to locality1

  std::size_t effective_lag() const { return lag.value_or(k1); }
  void validate() const {
    if (!(z >= 0.0 && z <= 1.0)) throw std::invalid_argument("z must lie in [0,1]");
    if (k1 < 2 || k2 < 2) throw std::invalid_argument("window length must be at least 2");
    if (effective_lag() < 1) throw std::invalid_argument("lag must be at least 1");
  }
};

struct MovingMeanConfig {
  std::size_t k = 15;
};

/// Local depth median of the window ending at n; the returned curve is always
/// a member of the window.
Curve forecast_p1(const FtsSeries& series, const Proposal1Config& cfg, std::size_t n);

/// z-weighted convex combination of the trimmed local means of the recent
/// window (ending at n1) and the older window (ending at n1 - lag).
Curve forecast_p2(const FtsSeries& series, const Proposal2Config& cfg, std::size_t n1);

/// Pointwise mean of the window ending at n.
Curve forecast_mean(const FtsSeries& series, std::size_t k, std::size_t n);

using PredictorMethod = std::variant<Proposal1Config, Proposal2Config, MovingMeanConfig>;

Curve forecast(const FtsSeries& series, const PredictorMethod& method, std::size_t n);

/// Smallest 1-based origin the method can forecast from.
std::size_t min_origin(const PredictorMethod& method);

std::string describe(const PredictorMethod& method);

struct ForecastPair {
  std::size_t origin;  // forecast made from the window ending here
  Curve forecast;      // prediction for origin + 1
  Curve realized;      // observed curve at origin + 1
};

/// One-step-ahead forecasts over origins [first, last], paired with the
/// realized next curve. Throws, naming the origin, when an origin violates
/// the predictor's history requirement or has no realized successor.
std::vector<ForecastPair> rolling_forecast(const FtsSeries& series, const PredictorMethod& method,
                                           std::size_t first_origin, std::size_t last_origin);

}  // namespace hfts
