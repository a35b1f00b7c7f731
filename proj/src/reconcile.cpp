#include "hfts/reconcile.hpp"

#include <Eigen/Cholesky>
#include <stdexcept>

#include "hfts/numeric.hpp"

namespace hfts {

DispersionMatrix DispersionMatrix::identity(std::size_t m) {
  return DispersionMatrix{Eigen::VectorXd::Ones(static_cast<Eigen::Index>(m)), {}, false};
}

DispersionMatrix robust_dispersion(const std::vector<std::vector<double>>& errors_per_node,
                                   double c, double eps_rel) {
  if (errors_per_node.empty()) throw std::invalid_argument("no nodes");
  Eigen::VectorXd diag(static_cast<Eigen::Index>(errors_per_node.size()));
  for (std::size_t i = 0; i < errors_per_node.size(); ++i) {
    if (errors_per_node[i].size() < 2)
      throw std::invalid_argument("node " + std::to_string(i) +
                                  " needs at least two historical errors");
    const double m = mad(errors_per_node[i], 1.0);
    diag(static_cast<Eigen::Index>(i)) = c * m * m;
  }

  DispersionMatrix out{diag, {}, false};
  const double top = diag.maxCoeff();
  if (top <= 0.0) {
    // All dispersions degenerate; any positive multiple of I yields the same
    // GLS solution, so fall back to the identity.
    out.diag.setOnes();
    out.degenerate = true;
    for (std::size_t i = 0; i < errors_per_node.size(); ++i) out.floored_nodes.push_back(i);
    return out;
  }
  const double eps = eps_rel * top;
  for (Eigen::Index i = 0; i < out.diag.size(); ++i) {
    if (out.diag(i) < eps) {
      out.diag(i) = eps;
      out.floored_nodes.push_back(static_cast<std::size_t>(i));
    }
  }
  return out;
}

Reconciled gls_reconcile(const BaseForecasts& base, const Eigen::MatrixXd& summing,
                         const DispersionMatrix& w) {
  const Eigen::Index m_nodes = summing.rows();
  const Eigen::Index m_bottom = summing.cols();
  if (static_cast<Eigen::Index>(base.curves.size()) != m_nodes)
    throw std::invalid_argument("base forecasts do not match summing-matrix rows");
  if (w.diag.size() != m_nodes)
    throw std::invalid_argument("dispersion matrix does not match summing-matrix rows");
  if ((w.diag.array() <= 0.0).any())
    throw std::invalid_argument("dispersion matrix entries must be positive");

  const Eigen::VectorXd w_inv = w.diag.cwiseInverse();
  const Eigen::MatrixXd stw = summing.transpose() * w_inv.asDiagonal();  // m x M
  const Eigen::MatrixXd normal = stw * summing;                          // m x m, SPD
  const Eigen::LDLT<Eigen::MatrixXd> solver(normal);
  if (solver.info() != Eigen::Success || !solver.isPositive())
    throw std::runtime_error("singular GLS system");

  const std::size_t g = base.grid.n_points;
  Eigen::MatrixXd r(m_nodes, static_cast<Eigen::Index>(g));
  for (Eigen::Index i = 0; i < m_nodes; ++i)
    for (std::size_t t = 0; t < g; ++t)
      r(i, static_cast<Eigen::Index>(t)) = base.curves[static_cast<std::size_t>(i)].values[t];

  // One factorization shared across grid points.
  const Eigen::MatrixXd bottom = solver.solve(stw * r);   // m x G
  const Eigen::MatrixXd full = summing * bottom;          // M x G

  Reconciled out;
  out.bottom.reserve(static_cast<std::size_t>(m_bottom));
  for (Eigen::Index i = 0; i < m_bottom; ++i) {
    std::vector<double> v(g);
    for (std::size_t t = 0; t < g; ++t) v[t] = bottom(i, static_cast<Eigen::Index>(t));
    out.bottom.emplace_back(base.grid, std::move(v));
  }
  out.full.reserve(static_cast<std::size_t>(m_nodes));
  for (Eigen::Index i = 0; i < m_nodes; ++i) {
    std::vector<double> v(g);
    for (std::size_t t = 0; t < g; ++t) v[t] = full(i, static_cast<Eigen::Index>(t));
    out.full.emplace_back(base.grid, std::move(v));
  }
  return out;
}

}  // namespace hfts
