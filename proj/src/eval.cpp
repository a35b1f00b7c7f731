#include "hfts/eval.hpp"

#include <cmath>
#include <stdexcept>

#include "hfts/numeric.hpp"

namespace hfts {

std::string to_string(ErrorKind k) { return k == ErrorKind::aise ? "aise" : "aiae"; }

ErrorKind error_kind_from_string(const std::string& s) {
  if (s == "aise") return ErrorKind::aise;
  if (s == "aiae") return ErrorKind::aiae;
  throw std::invalid_argument("unknown error metric: " + s);
}

std::string to_string(Reconciler r) { return r == Reconciler::none ? "none" : "gls"; }

Reconciler reconciler_from_string(const std::string& s) {
  if (s == "none") return Reconciler::none;
  if (s == "gls" || s == "gls_robust") return Reconciler::gls_robust;
  throw std::invalid_argument("unknown reconciler: " + s);
}

double integrated_error(const Curve& x, const Curve& xhat, ErrorKind kind) {
  require_same_grid(x, xhat);
  std::vector<double> diff(x.size());
  for (std::size_t t = 0; t < diff.size(); ++t) {
    const double d = x.values[t] - xhat.values[t];
    diff[t] = kind == ErrorKind::aise ? d * d : std::fabs(d);
  }
  return integrate(Curve(x.grid, std::move(diff))) / x.grid.length();
}

HftsDataset::HftsDataset(HierarchySpec h, std::vector<FtsSeries> s)
    : hierarchy_(std::move(h)), series_(std::move(s)) {
  if (series_.size() != hierarchy_.node_count())
    throw std::invalid_argument("dataset: series count does not match hierarchy");
  const Grid& g = series_.front().grid;
  const std::size_t len = series_.front().size();
  for (const FtsSeries& fs : series_) {
    if (!(fs.grid == g)) throw std::invalid_argument("dataset: grid mismatch across nodes");
    if (fs.size() != len) throw std::invalid_argument("dataset: series length mismatch");
  }
}

HftsDataset HftsDataset::from_leaves(HierarchySpec hierarchy,
                                     std::vector<FtsSeries> leaf_series) {
  if (leaf_series.size() != hierarchy.leaf_count())
    throw std::invalid_argument("dataset: expected one series per leaf");
  const Grid grid = leaf_series.front().grid;
  const std::size_t len = leaf_series.front().size();
  const std::size_t g = grid.n_points;

  std::vector<FtsSeries> all(hierarchy.node_count());
  for (std::size_t node = 0; node < hierarchy.node_count(); ++node) {
    if (hierarchy.is_leaf(node)) {
      // Leaf order equals the tail of node order by construction.
      const std::size_t col = hierarchy.leaf_columns(node).front();
      all[node] = leaf_series[col];
      all[node].cluster_id = hierarchy.node_ids()[node];
    }
  }
  for (std::size_t node = 0; node < hierarchy.node_count(); ++node) {
    if (hierarchy.is_leaf(node)) continue;
    std::vector<Curve> sums;
    sums.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<double> acc(g, 0.0);
      for (std::size_t col : hierarchy.leaf_columns(node)) {
        const Curve& c = leaf_series[col].curves[i];
        for (std::size_t t = 0; t < g; ++t) acc[t] += c.values[t];
      }
      sums.emplace_back(grid, std::move(acc));
    }
    all[node] = FtsSeries(grid, std::move(sums), hierarchy.node_ids()[node]);
  }
  return HftsDataset(std::move(hierarchy), std::move(all));
}

HftsDataset HftsDataset::validated(HierarchySpec hierarchy, std::vector<FtsSeries> node_series,
                                   double rel_tol) {
  HftsDataset ds(std::move(hierarchy), std::move(node_series));
  const HierarchySpec& h = ds.hierarchy_;
  for (std::size_t node = 0; node < h.node_count(); ++node) {
    if (h.is_leaf(node)) continue;
    for (std::size_t i = 0; i < ds.length(); ++i) {
      for (std::size_t t = 0; t < ds.grid().n_points; ++t) {
        double sum = 0.0;
        for (std::size_t child : h.children(node)) sum += ds.series_[child].curves[i].values[t];
        const double own = ds.series_[node].curves[i].values[t];
        const double scale = std::max({std::fabs(own), std::fabs(sum), 1.0});
        if (std::fabs(own - sum) > rel_tol * scale)
          throw std::invalid_argument("dataset: aggregation identity violated at node '" +
                                      h.node_ids()[node] + "', period " + std::to_string(i + 1));
      }
    }
  }
  return ds;
}

BacktestReport backtest(const HftsDataset& data, const PredictorSpec& predictor,
                        std::size_t first_origin, std::size_t last_origin,
                        const BacktestOptions& options) {
  const HierarchySpec& h = data.hierarchy();
  const std::size_t m_nodes = h.node_count();
  std::size_t need = min_origin(predictor.method);
  for (const auto& [id, method] : predictor.node_overrides)
    need = std::max(need, min_origin(method));
  if (first_origin > last_origin) throw std::invalid_argument("empty origin range");
  if (first_origin < need)
    throw std::invalid_argument("origin " + std::to_string(first_origin) +
                                " violates the predictor history requirement");
  if (last_origin + 1 > data.length())
    throw std::invalid_argument("origin " + std::to_string(last_origin) +
                                " has no realized successor");

  BacktestReport report;
  report.predictor = predictor.display_name();
  report.node_ids = h.node_ids();
  report.config_echo = describe(predictor.method) + ",reconcile=" + to_string(options.reconciler) +
                       ",metric=" + to_string(options.metric);
  report.errors.assign(m_nodes, {});

  const Eigen::MatrixXd summing =
      options.reconciler == Reconciler::gls_robust ? build_summing_matrix(h) : Eigen::MatrixXd();

  // Integrated squared base-forecast errors per node, grown as origins pass;
  // these feed the robust dispersion estimate with no look-ahead.
  std::vector<std::vector<double>> ise_history(m_nodes);

  for (std::size_t n = first_origin; n <= last_origin; ++n) {
    std::vector<Curve> base;
    base.reserve(m_nodes);
    for (std::size_t node = 0; node < m_nodes; ++node)
      base.push_back(forecast(data.series(node), predictor.method_for(h.node_ids()[node]), n));

    std::vector<Curve> final_curves;
    if (options.reconciler == Reconciler::gls_robust) {
      bool enough = true;
      for (const auto& hist : ise_history)
        if (hist.size() < options.min_w_history) enough = false;

      DispersionMatrix w = DispersionMatrix::identity(m_nodes);
      if (enough) {
        w = robust_dispersion(ise_history, options.dispersion_c);
        if (w.degenerate)
          report.warnings.push_back("origin " + std::to_string(n) +
                                    ": all error dispersions zero, identity W used");
      } else {
        report.warnings.push_back("origin " + std::to_string(n) +
                                  ": insufficient error history, identity W used");
      }
      final_curves = gls_reconcile(BaseForecasts(data.grid(), base), summing, w).full;
    } else {
      final_curves = base;
    }

    for (std::size_t node = 0; node < m_nodes; ++node) {
      const Curve& realized = data.series(node).curves[n];  // curve at period n+1
      report.errors[node].push_back(integrated_error(realized, final_curves[node], options.metric));
      const double ise =
          integrated_error(realized, base[node], ErrorKind::aise) * data.grid().length();
      ise_history[node].push_back(ise);
    }
    report.origins.push_back(n);
    if (options.keep_forecasts) report.forecasts.push_back(std::move(final_curves));
  }

  report.mad_summary.resize(m_nodes);
  for (std::size_t node = 0; node < m_nodes; ++node)
    report.mad_summary[node] = mad(report.errors[node], 1.0);
  return report;
}

std::vector<BacktestReport> compare_predictors(const HftsDataset& data,
                                               const std::vector<PredictorSpec>& predictors,
                                               std::size_t first_origin, std::size_t last_origin,
                                               const BacktestOptions& options) {
  std::vector<BacktestReport> out;
  out.reserve(predictors.size());
  for (const PredictorSpec& p : predictors)
    out.push_back(backtest(data, p, first_origin, last_origin, options));
  return out;
}

}  // namespace hfts
