#include "hfts/predict.hpp"

#include <sstream>
#include <stdexcept>

namespace hfts {

FunctionalSample Window::slice(const FtsSeries& series) const {
  if (end > series.size()) throw std::invalid_argument("window exceeds history");
  std::vector<Curve> cs(series.curves.begin() + static_cast<std::ptrdiff_t>(end - length),
                        series.curves.begin() + static_cast<std::ptrdiff_t>(end));
  return FunctionalSample(series.grid, std::move(cs));
}

Curve forecast_p1(const FtsSeries& series, const Proposal1Config& cfg, std::size_t n) {
  const FunctionalSample window = Window(n, cfg.k).slice(series);
  return depth_median(window, cfg.locality).second;
}

Curve forecast_p2(const FtsSeries& series, const Proposal2Config& cfg, std::size_t n1) {
  cfg.validate();
  const std::size_t lag = cfg.effective_lag();
  if (n1 < lag + cfg.k2) throw std::invalid_argument("window exceeds history");
  const std::size_t n2 = n1 - lag;

  const FunctionalSample recent = Window(n1, cfg.k1).slice(series);
  const FunctionalSample older = Window(n2, cfg.k2).slice(series);

  const Curve recent_mean = trimmed_local_mean(recent, cfg.alpha1, cfg.locality1);
  const Curve older_mean = trimmed_local_mean(older, cfg.alpha2.value_or(cfg.alpha1),
                                              cfg.locality2.value_or(cfg.locality1));

  std::vector<double> blend(series.grid.n_points);
  for (std::size_t t = 0; t < blend.size(); ++t)
    blend[t] = cfg.z * recent_mean.values[t] + (1.0 - cfg.z) * older_mean.values[t];
  return Curve(series.grid, std::move(blend));
}

Curve forecast_mean(const FtsSeries& series, std::size_t k, std::size_t n) {
  const FunctionalSample window = Window(n, k).slice(series);
  std::vector<double> mean(series.grid.n_points, 0.0);
  for (const Curve& c : window.curves)
    for (std::size_t t = 0; t < mean.size(); ++t) mean[t] += c.values[t];
  const double inv = 1.0 / static_cast<double>(window.size());
  for (double& v : mean) v *= inv;
  return Curve(series.grid, std::move(mean));
}

Curve forecast(const FtsSeries& series, const PredictorMethod& method, std::size_t n) {
  return std::visit(
      [&](const auto& cfg) -> Curve {
        using T = std::decay_t<decltype(cfg)>;
        if constexpr (std::is_same_v<T, Proposal1Config>)
          return forecast_p1(series, cfg, n);
        else if constexpr (std::is_same_v<T, Proposal2Config>)
          return forecast_p2(series, cfg, n);
        else
          return forecast_mean(series, cfg.k, n);
      },
      method);
}

std::size_t min_origin(const PredictorMethod& method) {
  return std::visit(
      [](const auto& cfg) -> std::size_t {
        using T = std::decay_t<decltype(cfg)>;
        if constexpr (std::is_same_v<T, Proposal1Config>)
          return cfg.k;
        else if constexpr (std::is_same_v<T, Proposal2Config>)
          return std::max(cfg.k1, cfg.effective_lag() + cfg.k2);
        else
          return cfg.k;
      },
      method);
}

std::string describe(const PredictorMethod& method) {
  std::ostringstream os;
  std::visit(
      [&](const auto& cfg) {
        using T = std::decay_t<decltype(cfg)>;
        if constexpr (std::is_same_v<T, Proposal1Config>) {
          os << "p1(k=" << cfg.k << ",beta=" << cfg.locality.beta
             << ",depth=" << to_string(cfg.locality.depth_kind) << ")";
        } else if constexpr (std::is_same_v<T, Proposal2Config>) {
          os << "p2(z=" << cfg.z << ",alpha=" << cfg.alpha1 << ",beta=" << cfg.locality1.beta
             << ",depth=" << to_string(cfg.locality1.depth_kind) << ",k1=" << cfg.k1
             << ",k2=" << cfg.k2 << ",lag=" << cfg.effective_lag() << ")";
        } else {
          os << "mean(k=" << cfg.k << ")";
        }
      },
      method);
  return os.str();
}

std::vector<ForecastPair> rolling_forecast(const FtsSeries& series, const PredictorMethod& method,
                                           std::size_t first_origin, std::size_t last_origin) {
  if (first_origin > last_origin) throw std::invalid_argument("empty origin range");
  const std::size_t need = min_origin(method);
  std::vector<ForecastPair> out;
  out.reserve(last_origin - first_origin + 1);
  for (std::size_t n = first_origin; n <= last_origin; ++n) {
    if (n < need)
      throw std::invalid_argument("origin " + std::to_string(n) +
                                  " violates the predictor history requirement");
    if (n + 1 > series.size())
      throw std::invalid_argument("origin " + std::to_string(n) + " has no realized successor");
    out.push_back(ForecastPair{n, forecast(series, method, n), series.curves[n]});
  }
  return out;
}

}  // namespace hfts
