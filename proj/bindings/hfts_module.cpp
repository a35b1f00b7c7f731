// Python bindings for the main operations: band depths and their local
// versions, the robust window predictors, GLS reconciliation, the seeded
// simulators and the error metrics. Curves travel as numpy arrays with one
// row per curve.

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hfts/eval.hpp"
#include "hfts/io.hpp"
#include "hfts/numeric.hpp"
#include "hfts/sim.hpp"

namespace py = pybind11;
using namespace hfts;

namespace {

using Array1 = py::array_t<double, py::array::c_style | py::array::forcecast>;
using Array2 = py::array_t<double, py::array::c_style | py::array::forcecast>;

Curve to_curve(const Array1& a, const Grid& grid) {
  if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  const double* p = a.data();
  return Curve(grid, std::vector<double>(p, p + n));
}

std::vector<Curve> to_curves(const Array2& a, const Grid& grid) {
  if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d array (rows = curves)");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  const double* p = a.data();
  std::vector<Curve> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i)
    out.emplace_back(grid, std::vector<double>(p + i * cols, p + (i + 1) * cols));
  return out;
}

FunctionalSample to_sample(const Array2& a, const Grid& grid) {
  return FunctionalSample(grid, to_curves(a, grid));
}

py::array_t<double> from_vector(const std::vector<double>& v) {
  py::array_t<double> out(py::array::ShapeContainer{static_cast<py::ssize_t>(v.size())});
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::array_t<double> from_curve(const Curve& c) { return from_vector(c.values); }

py::array_t<double> from_curves(const std::vector<Curve>& cs) {
  const auto rows = static_cast<py::ssize_t>(cs.size());
  const auto cols = static_cast<py::ssize_t>(cs.front().size());
  py::array_t<double> out({rows, cols});
  double* p = out.mutable_data();
  for (const Curve& c : cs) p = std::copy(c.values.begin(), c.values.end(), p);
  return out;
}

LocalityParams locality(double beta, const std::string& kind) {
  return LocalityParams(beta, depth_kind_from_string(kind));
}

}  // namespace

PYBIND11_MODULE(_hfts, m) {
  m.doc() = "Depth-based robust forecasting for hierarchical functional time series";
  m.attr("__version__") = "0.1.0";


  py::class_<Grid>(m, "Grid")
      .def(py::init<double, double, std::size_t>(), py::arg("t_start"), py::arg("t_end"),
           py::arg("n_points"))
      .def(py::init<double, std::size_t>(), py::arg("t_end"), py::arg("n_points"))
      .def_readonly("t_start", &Grid::t_start)
      .def_readonly("t_end", &Grid::t_end)
      .def_readonly("n_points", &Grid::n_points)
      .def("spacing", &Grid::spacing)
      .def("__repr__", [](const Grid& g) {
        return "Grid(t_start=" + format_double(g.t_start) + ", t_end=" + format_double(g.t_end) +
               ", n_points=" + std::to_string(g.n_points) + ")";
      });

  // depth ------------------------------------------------------------------
  m.def(
      "band_depth",
      [](const Array2& sample, const Grid& grid, const std::string& kind,
         const py::object& query) -> py::object {
        const FunctionalSample s = to_sample(sample, grid);
        const DepthKind k = depth_kind_from_string(kind);
        if (query.is_none()) return from_vector(base_depth_all(s, k));
        return py::float_(base_depth(to_curve(query.cast<Array1>(), grid), s, k));
      },
      py::arg("sample"), py::arg("grid"), py::arg("kind") = "mbd", py::arg("query") = py::none(),
      "Band depth of each sample member, or of a query curve when given.");

  m.def(
      "local_depth",
      [](const Array2& sample, const Grid& grid, double beta, const std::string& kind,
         const py::object& query) -> py::object {
        const FunctionalSample s = to_sample(sample, grid);
        const LocalityParams p = locality(beta, kind);
        if (query.is_none()) return from_vector(local_depth_all(s, p));
        return py::float_(local_depth(to_curve(query.cast<Array1>(), grid), s, p));
      },
      py::arg("sample"), py::arg("grid"), py::arg("beta"), py::arg("kind") = "mbd",
      py::arg("query") = py::none(),
      "Symmetrized local depth at locality level beta.");

  m.def(
      "depth_median",
      [](const Array2& sample, const Grid& grid, double beta, const std::string& kind) {
        const auto [idx, curve] = depth_median(to_sample(sample, grid), locality(beta, kind));
        return py::make_tuple(idx, from_curve(curve));
      },
      py::arg("sample"), py::arg("grid"), py::arg("beta") = 1.0, py::arg("kind") = "mbd",
      "(index, curve) of the local-depth median.");

  m.def(
      "trimmed_local_mean",
      [](const Array2& sample, const Grid& grid, double alpha, double beta,
         const std::string& kind) {
        return from_curve(trimmed_local_mean(to_sample(sample, grid), alpha, locality(beta, kind)));
      },
      py::arg("sample"), py::arg("grid"), py::arg("alpha"), py::arg("beta"),
      py::arg("kind") = "mbd",
      "Mean of the curves whose local depth exceeds alpha.");

  m.def(
      "functional_boxplot",
      [](const Array2& sample, const Grid& grid, const std::string& kind, double central_prop,
         double whisker_factor) {
        const FunctionalBoxplot box =
            functional_boxplot(to_sample(sample, grid), depth_kind_from_string(kind),
                               central_prop, whisker_factor);
        py::dict out;
        out["central_lo"] = from_curve(box.central_lo);
        out["central_hi"] = from_curve(box.central_hi);
        out["whisker_lo"] = from_curve(box.whisker_lo);
        out["whisker_hi"] = from_curve(box.whisker_hi);
        out["outlier"] = box.outlier;
        return out;
      },
      py::arg("sample"), py::arg("grid"), py::arg("kind") = "mbd", py::arg("central_prop") = 0.5,
      py::arg("whisker_factor") = 1.5);

  // predictors ---------------------------------------------------------------
  m.def(
      "forecast_p1",
      [](const Array2& series, const Grid& grid, std::size_t k, double beta,
         const std::string& kind, std::size_t at) {
        const FtsSeries s(grid, to_curves(series, grid));
        return from_curve(forecast_p1(s, Proposal1Config{k, locality(beta, kind)},
                                      at == 0 ? s.size() : at));
      },
      py::arg("series"), py::arg("grid"), py::arg("k") = 15, py::arg("beta") = 0.45,
      py::arg("kind") = "mbd", py::arg("at") = 0,
      "Moving local-median forecast from the window ending at `at` (default: series end).");

  m.def(
      "forecast_p2",
      [](const Array2& series, const Grid& grid, double z, double alpha, double beta,
         const std::string& kind, std::size_t k1, std::size_t k2, std::size_t lag,
         std::size_t at) {
        const FtsSeries s(grid, to_curves(series, grid));
        Proposal2Config cfg;
        cfg.z = z;
        cfg.alpha1 = alpha;
        cfg.locality1 = locality(beta, kind);
        cfg.k1 = k1;
        cfg.k2 = k2;
        if (lag > 0) cfg.lag = lag;
        return from_curve(forecast_p2(s, cfg, at == 0 ? s.size() : at));
      },
      py::arg("series"), py::arg("grid"), py::arg("z") = 0.5, py::arg("alpha") = 0.0,
      py::arg("beta") = 0.45, py::arg("kind") = "mbd", py::arg("k1") = 15, py::arg("k2") = 15,
      py::arg("lag") = 0, py::arg("at") = 0,
      "Two-window trimmed local mean with forgetting weight z.");

  m.def(
      "forecast_mean",
      [](const Array2& series, const Grid& grid, std::size_t k, std::size_t at) {
        const FtsSeries s(grid, to_curves(series, grid));
        return from_curve(forecast_mean(s, k, at == 0 ? s.size() : at));
      },
      py::arg("series"), py::arg("grid"), py::arg("k") = 15, py::arg("at") = 0);

  // hierarchy / reconciliation ----------------------------------------------
  m.def(
      "summing_matrix",
      [](const std::vector<std::string>& ids, const std::vector<std::string>& parents) {
        const HierarchySpec h(ids, parents);
        py::dict out;
        out["matrix"] = build_summing_matrix(h);
        out["node_ids"] = h.node_ids();
        out["leaf_ids"] = h.leaf_ids();
        return out;
      },
      py::arg("ids"), py::arg("parents"),
      "Summing matrix and canonical node order for (node, parent) pairs; the root "
      "has an empty parent.");

  m.def(
      "robust_dispersion",
      [](const std::vector<std::vector<double>>& errors, double c) {
        return Eigen::VectorXd(robust_dispersion(errors, c).diag);
      },
      py::arg("errors"), py::arg("c") = 1.0,
      "Diagonal of W: c * MAD(history)^2 per node, floored away from zero.");

  m.def(
      "gls_reconcile",
      [](const Array2& base, const Grid& grid, const Eigen::MatrixXd& summing,
         const Eigen::VectorXd& w_diag) {
        const Reconciled rec = gls_reconcile(BaseForecasts(grid, to_curves(base, grid)), summing,
                                             DispersionMatrix{w_diag, {}, false});
        return py::make_tuple(from_curves(rec.bottom), from_curves(rec.full));
      },
      py::arg("base"), py::arg("grid"), py::arg("summing"), py::arg("w_diag"),
      "(bottom, full) reconciled forecasts; rows follow the summing-matrix order.");

  // metrics -------------------------------------------------------------------
  m.def(
      "integrated_error",
      [](const Array1& x, const Array1& xhat, const Grid& grid, const std::string& kind) {
        return integrated_error(to_curve(x, grid), to_curve(xhat, grid),
                                error_kind_from_string(kind));
      },
      py::arg("x"), py::arg("xhat"), py::arg("grid"), py::arg("kind") = "aiae");

  m.def(
      "mad", [](const std::vector<double>& xs, double c) { return mad(xs, c); }, py::arg("xs"),
      py::arg("c") = kMadGaussianConsistency);

  // simulators ----------------------------------------------------------------
  m.def(
      "sv_path",
      [](std::size_t n, double gamma, double fi, double sigma, double delta, std::uint64_t seed) {
        Rng rng(seed);
        return from_vector(sv_path(n, SvParams{gamma, fi, sigma, delta}, rng));
      },
      py::arg("n"), py::arg("gamma") = 0.0, py::arg("fi") = 0.2, py::arg("sigma") = 0.5,
      py::arg("delta") = 0.1, py::arg("seed") = 1);

  m.def(
      "sv_curves",
      [](std::size_t n_curves, const Grid& grid, double a, double b, std::uint64_t seed) {
        Rng rng(seed);
        return from_curves(sv_curves(n_curves, grid, a, b, rng).curves);
      },
      py::arg("n_curves"), py::arg("grid"), py::arg("a") = 5.0, py::arg("b") = 0.0,
      py::arg("seed") = 1);

  m.def(
      "two_regime_sample",
      [](std::size_t eps, std::size_t m, std::size_t n, double a, double b, double c, double d,
         const Grid& grid, std::uint64_t seed) {
        Rng rng(seed);
        return from_curves(two_regime_sample(eps, m, n, a, b, c, d, grid, rng).curves);
      },
      py::arg("eps"), py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"),
      py::arg("d"), py::arg("grid"), py::arg("seed") = 1);

  m.def(
      "far1_series",
      [](std::size_t n_curves, const Grid& grid, double rho, std::uint64_t seed) {
        Rng rng(seed);
        Far1Params p;
        p.grid = grid;
        p.rho = rho;
        return from_curves(far1_series(n_curves, p, rng).series.curves);
      },
      py::arg("n_curves"), py::arg("grid"), py::arg("rho") = 0.5, py::arg("seed") = 1);

  m.def(
      "classical_paths",
      [](const std::string& kind, std::size_t n_curves, const Grid& grid, std::uint64_t seed) {
        Rng rng(seed);
        const ClassicalKind k = kind == "wiener" ? ClassicalKind::wiener
                              : kind == "bridge" ? ClassicalKind::brownian_bridge
                                                 : throw std::invalid_argument(
                                                       "kind must be 'wiener' or 'bridge'");
        return from_curves(classical_paths(k, n_curves, grid, rng).curves);
      },
      py::arg("kind"), py::arg("n_curves"), py::arg("grid"), py::arg("seed") = 1);

  m.def(
      "garch_path",
      [](std::size_t n, double omega, double alpha, double beta, std::uint64_t seed) {
        Rng rng(seed);
        return from_vector(garch_path(n, GarchParams{omega, alpha, beta}, rng));
      },
      py::arg("n"), py::arg("omega") = 0.1, py::arg("alpha") = 0.1, py::arg("beta") = 0.8,
      py::arg("seed") = 1);

  m.def(
      "inject_outliers",
      [](const Array2& series, const Grid& grid, double proportion, double magnitude,
         const std::string& kind, std::uint64_t seed) {
        Rng rng(seed);
        const OutlierInjection inj =
            inject_outliers(FtsSeries(grid, to_curves(series, grid)), proportion, magnitude,
                            depth_kind_from_string(kind), rng);
        return py::make_tuple(from_curves(inj.contaminated.curves), inj.indices);
      },
      py::arg("series"), py::arg("grid"), py::arg("proportion"), py::arg("magnitude") = 2.0,
      py::arg("kind") = "mbd", py::arg("seed") = 1,
      "(contaminated, injected_indices); curves beyond the boxplot whiskers.");
}
