#pragma once

#include <map>
#include <string>
#include <vector>

#include "hfts/hierarchy.hpp"
#include "hfts/predict.hpp"
#include "hfts/reconcile.hpp"

namespace hfts {

enum class ErrorKind { aise, aiae };

std::string to_string(ErrorKind k);
ErrorKind error_kind_from_string(const std::string& s);

/// Average integrated error between a realized curve and its forecast:
/// AISE = (1/T) integral (x - xhat)^2, AIAE = (1/T) integral |x - xhat|.
double integrated_error(const Curve& x, const Curve& xhat, ErrorKind kind);

/// Hierarchical functional time series: one aligned series per node, with
/// internal-node series equal to the sum of their children.
class HftsDataset {
 public:
  /// Construct internal/root series by summation from the leaf series,
  /// given in hierarchy leaf order.
  static HftsDataset from_leaves(HierarchySpec hierarchy, std::vector<FtsSeries> leaf_series);

  /// Take series for every node (hierarchy node order) and validate the
  /// aggregation identity to rel_tol.
  static HftsDataset validated(HierarchySpec hierarchy, std::vector<FtsSeries> node_series,
                               double rel_tol = 1e-6);

  const HierarchySpec& hierarchy() const { return hierarchy_; }
  const Grid& grid() const { return series_.front().grid; }
  std::size_t length() const { return series_.front().size(); }  // curves per node
  const FtsSeries& series(std::size_t node_index) const { return series_[node_index]; }
  const std::vector<FtsSeries>& all_series() const { return series_; }

 private:
  HftsDataset(HierarchySpec h, std::vector<FtsSeries> s);

  HierarchySpec hierarchy_;
  std::vector<FtsSeries> series_;  // node order
};

enum class Reconciler { none, gls_robust };

std::string to_string(Reconciler r);
Reconciler reconciler_from_string(const std::string& s);

struct PredictorSpec {
  std::string name;  // empty = describe(method)
  PredictorMethod method;
  std::map<std::string, PredictorMethod> node_overrides;  // per-node configs by id

  std::string display_name() const { return name.empty() ? describe(method) : name; }
  const PredictorMethod& method_for(const std::string& node_id) const {
    const auto it = node_overrides.find(node_id);
    return it == node_overrides.end() ? method : it->second;
  }
};

/// Per-node error series across rolling origins plus their MAD summary.
struct BacktestReport {
  std::string predictor;
  std::vector<std::string> node_ids;
  std::vector<std::size_t> origins;
  std::vector<std::vector<double>> errors;  // [node][origin position]
  std::vector<double> mad_summary;          // per node, MAD with c = 1
  std::string config_echo;
  std::vector<std::string> warnings;
  std::vector<std::vector<Curve>> forecasts;  // [origin position][node], if kept
};

struct BacktestOptions {
  Reconciler reconciler = Reconciler::none;
  ErrorKind metric = ErrorKind::aiae;
  double dispersion_c = 1.0;      // c in c * MAD^2 for W
  std::size_t min_w_history = 2;  // prior errors per node before W kicks in
  bool keep_forecasts = false;
};

/// Rolling one-step-ahead backtest. For each origin: base forecast per node,
/// optional GLS reconciliation with W estimated from integrated squared
/// base-forecast errors at strictly earlier origins (expanding window,
/// identity W with a warning until enough history), then the chosen error
/// metric against the realized curves. Summary is the per-node MAD (c = 1).
BacktestReport backtest(const HftsDataset& data, const PredictorSpec& predictor,
                        std::size_t first_origin, std::size_t last_origin,
                        const BacktestOptions& options = {});

/// One report per predictor over a shared origin range.
std::vector<BacktestReport> compare_predictors(const HftsDataset& data,
                                               const std::vector<PredictorSpec>& predictors,
                                               std::size_t first_origin, std::size_t last_origin,
                                               const BacktestOptions& options = {});

}  // namespace hfts
