#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hfts/curve.hpp"
#include "hfts/hierarchy.hpp"

namespace hfts {

/// Diagonal dispersion matrix W, one entry per node in hierarchy order.
struct DispersionMatrix {
  Eigen::VectorXd diag;
  std::vector<std::size_t> floored_nodes;  // entries raised to the epsilon floor
  bool degenerate = false;                 // every MAD was zero; identity used

  static DispersionMatrix identity(std::size_t m);
};

/// Robust per-node dispersion: c * MAD(history)^2, with zero entries floored
/// at eps_rel times the largest entry so W stays invertible. Every node needs
/// at least two historical errors.
DispersionMatrix robust_dispersion(const std::vector<std::vector<double>>& errors_per_node,
                                   double c, double eps_rel = 1e-12);

/// Per-node base forecasts ordered like the summing-matrix rows.
struct BaseForecasts {
  Grid grid;
  std::vector<Curve> curves;  // size M

  BaseForecasts(Grid g, std::vector<Curve> cs) : grid(g), curves(std::move(cs)) {
    for (const Curve& c : curves)
      if (!(c.grid == grid)) throw std::invalid_argument("grid mismatch");
  }
};

struct Reconciled {
  std::vector<Curve> bottom;  // m leaf curves
  std::vector<Curve> full;    // M curves = S * bottom, aggregation-consistent
};

/// GLS reconciliation applied independently at each grid point: solve
/// (S^T W^-1 S) b = S^T W^-1 r and return b together with S b.
Reconciled gls_reconcile(const BaseForecasts& base, const Eigen::MatrixXd& summing,
                         const DispersionMatrix& w);

}  // namespace hfts
