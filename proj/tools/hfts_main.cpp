// hfts command line front end: simulation, depth evaluation, forecasting,
// hierarchical backtesting and demand-CSV ingestion. Every command writes a
// manifest.json holding the fully resolved parameters, so a run can be
// replayed with --config <manifest.json>.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hfts/eval.hpp"
#include "hfts/io.hpp"
#include "hfts/sim.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonArgs {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> grid_points;
  std::optional<double> t_end;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config, "JSON config file (or a manifest to replay)");
  cmd->add_option("--seed", args.seed, "RNG seed");
  cmd->add_option("--out", args.out, "output directory");
  cmd->add_option("--grid-points", args.grid_points, "grid points per curve");
  cmd->add_option("--t-end", args.t_end, "grid interval end T");
}

json load_config(const std::optional<std::string>& path) {
  if (!path) return json::object();
  std::ifstream in(*path);
  if (!in) throw std::invalid_argument("cannot open config: " + *path);
  json j = json::parse(in);
  if (j.contains("params")) j = j.at("params");  // accept a manifest
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  return j;
}

template <class T>
T resolve(const std::optional<T>& flag, const json& cfg, const std::string& key, T def) {
  if (flag) return *flag;
  if (cfg.contains(key)) return cfg.at(key).get<T>();
  return def;
}

fs::path require_out(const std::optional<std::string>& out, const json& cfg) {
  const std::string dir = resolve(out, cfg, "out", std::string());
  if (dir.empty()) throw std::invalid_argument("--out is required");
  fs::create_directories(dir);
  return dir;
}

void write_manifest(const fs::path& dir, const std::string& command, const json& params) {
  json manifest;
  manifest["command"] = command;
  manifest["version"] = kVersion;
  manifest["params"] = params;
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  out << manifest.dump(2) << "\n";
}

hfts::Grid resolve_grid(const CommonArgs& args, const json& cfg, std::size_t default_points,
                        double default_t_end) {
  return hfts::Grid(0.0, resolve(args.t_end, cfg, "t-end", default_t_end),
                    resolve(args.grid_points, cfg, "grid-points", default_points));
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  CommonArgs common;
  std::optional<std::string> model;
  std::optional<std::size_t> n_curves;
  std::optional<double> a, b, c, d;
  std::optional<std::size_t> eps, m, n;
  std::optional<double> rho;
  std::optional<double> omega, garch_alpha, garch_beta;
};

int cmd_simulate(const SimulateArgs& args) {
  const json cfg = load_config(args.common.config);
  const fs::path out_dir = require_out(args.common.out, cfg);
  const std::uint64_t seed = resolve(args.common.seed, cfg, "seed", std::uint64_t{1});
  const std::string model = resolve(args.model, cfg, "model", std::string("sv"));
  const hfts::Grid grid = resolve_grid(args.common, cfg, 120, 1.0);
  hfts::Rng rng(seed);

  json params;
  params["model"] = model;
  params["seed"] = seed;
  params["grid-points"] = grid.n_points;
  params["t-end"] = grid.t_end;

  std::vector<hfts::Curve> curves;
  if (model == "sv") {
    const auto n_curves = resolve(args.n_curves, cfg, "n-curves", std::size_t{100});
    const double a = resolve(args.a, cfg, "a", 5.0);
    const double b = resolve(args.b, cfg, "b", 0.0);
    curves = hfts::sv_curves(n_curves, grid, a, b, rng).curves;
    params["n-curves"] = n_curves;
    params["a"] = a;
    params["b"] = b;
  } else if (model == "two-regime") {
    const auto eps = resolve(args.eps, cfg, "eps", std::size_t{150});
    const auto m = resolve(args.m, cfg, "m", std::size_t{3000});
    const auto n = resolve(args.n, cfg, "n", std::size_t{7000});
    const double a = resolve(args.a, cfg, "a", 5.0);
    const double b = resolve(args.b, cfg, "b", 0.0);
    const double c = resolve(args.c, cfg, "c", 1.0);
    const double d = resolve(args.d, cfg, "d", 25.0);
    curves = hfts::two_regime_sample(eps, m, n, a, b, c, d, grid, rng).curves;
    params["eps"] = eps;
    params["m"] = m;
    params["n"] = n;
    params["a"] = a;
    params["b"] = b;
    params["c"] = c;
    params["d"] = d;
  } else if (model == "far1") {
    const auto n_curves = resolve(args.n_curves, cfg, "n-curves", std::size_t{100});
    hfts::Far1Params p;
    p.grid = grid;
    p.rho = resolve(args.rho, cfg, "rho", 0.5);
    const hfts::Far1Result res = hfts::far1_series(n_curves, p, rng);
    if (res.nonstationary)
      std::cerr << "warning: kernel operator norm >= 1, series is nonstationary\n";
    curves = res.series.curves;
    params["n-curves"] = n_curves;
    params["rho"] = p.rho;
  } else if (model == "wiener" || model == "bridge") {
    const auto n_curves = resolve(args.n_curves, cfg, "n-curves", std::size_t{100});
    const auto kind = model == "wiener" ? hfts::ClassicalKind::wiener
                                        : hfts::ClassicalKind::brownian_bridge;
    curves = hfts::classical_paths(kind, n_curves, grid, rng).curves;
    params["n-curves"] = n_curves;
  } else if (model == "garch") {
    const auto n_curves = resolve(args.n_curves, cfg, "n-curves", std::size_t{100});
    hfts::GarchParams p;
    p.omega = resolve(args.omega, cfg, "omega", 0.1);
    p.alpha = resolve(args.garch_alpha, cfg, "garch-alpha", 0.1);
    p.beta = resolve(args.garch_beta, cfg, "garch-beta", 0.8);
    const std::uint64_t base = rng.next_u64();
    for (std::size_t i = 0; i < n_curves; ++i) {
      hfts::Rng sub(hfts::mix_seed(base ^ hfts::mix_seed(i)));
      curves.emplace_back(grid, hfts::garch_path(grid.n_points, p, sub));
    }
    params["n-curves"] = n_curves;
    params["omega"] = p.omega;
    params["garch-alpha"] = p.alpha;
    params["garch-beta"] = p.beta;
  } else {
    throw std::invalid_argument("unknown model: " + model);
  }

  hfts::write_curves_csv(out_dir / "curves.csv", curves);
  write_manifest(out_dir, "simulate", params);
  std::cout << "wrote " << curves.size() << " curves to " << (out_dir / "curves.csv").string()
            << "\n";
  return 0;
}

// ------------------------------------------------------------------- depth

struct DepthArgs {
  CommonArgs common;
  std::optional<std::string> input;
  std::optional<double> beta;
  std::optional<std::string> depth_kind;
};

int cmd_depth(const DepthArgs& args) {
  const json cfg = load_config(args.common.config);
  const fs::path out_dir = require_out(args.common.out, cfg);
  const std::string input = resolve(args.input, cfg, "input", std::string());
  if (input.empty()) throw std::invalid_argument("--input is required");
  const hfts::Grid grid = resolve_grid(args.common, cfg, 120, 1.0);
  const double beta = resolve(args.beta, cfg, "beta", 1.0);
  const std::string kind_name = resolve(args.depth_kind, cfg, "depth", std::string("cgbd"));
  const hfts::DepthKind kind = hfts::depth_kind_from_string(kind_name);

  const hfts::FunctionalSample sample(grid, hfts::read_curves_csv(input, grid));
  std::vector<double> depths;
  if (beta >= 1.0)
    depths = hfts::base_depth_all(sample, kind);
  else
    depths = hfts::local_depth_all(sample, hfts::LocalityParams(beta, kind));

  std::ofstream out(out_dir / "depths.csv", std::ios::binary);
  out << "curve,depth\n";
  for (std::size_t i = 0; i < depths.size(); ++i)
    out << i << "," << hfts::format_double(depths[i]) << "\n";

  json params;
  params["seed"] = resolve(args.common.seed, cfg, "seed", std::uint64_t{1});
  params["input"] = input;
  params["beta"] = beta;
  params["depth"] = kind_name;
  params["grid-points"] = grid.n_points;
  params["t-end"] = grid.t_end;
  write_manifest(out_dir, "depth", params);
  std::cout << "wrote depth values for " << depths.size() << " curves\n";
  return 0;
}

// -------------------------------------------------------- predictor config

struct PredictorArgs {
  std::optional<std::string> predictor;
  std::optional<std::size_t> window;
  std::optional<double> beta;
  std::optional<double> alpha;
  std::optional<double> z;
  std::optional<std::size_t> k2;
  std::optional<std::size_t> lag;
  std::optional<std::string> depth_kind;
};

void add_predictor_flags(CLI::App* cmd, PredictorArgs& args) {
  cmd->add_option("--predictor", args.predictor, "p1 | p2 | mean (comma list allowed)");
  cmd->add_option("--window", args.window, "moving window length k (k1 for p2)");
  cmd->add_option("--beta", args.beta, "locality level in (0,1]");
  cmd->add_option("--alpha", args.alpha, "trim level for p2");
  cmd->add_option("--z", args.z, "forgetting weight for p2");
  cmd->add_option("--k2", args.k2, "older window length for p2");
  cmd->add_option("--lag", args.lag, "distance between window ends for p2");
  cmd->add_option("--depth-kind", args.depth_kind, "cgbd | mbd");
}

hfts::PredictorMethod make_method(const std::string& name, const PredictorArgs& args,
                                  const json& cfg) {
  const auto window = resolve(args.window, cfg, "window", std::size_t{15});
  const double beta = resolve(args.beta, cfg, "beta", 0.45);
  const std::string kind_name = resolve(args.depth_kind, cfg, "depth-kind", std::string("mbd"));
  const hfts::DepthKind kind = hfts::depth_kind_from_string(kind_name);
  if (name == "p1") return hfts::Proposal1Config{window, hfts::LocalityParams(beta, kind)};
  if (name == "p2") {
    hfts::Proposal2Config p2;
    p2.z = resolve(args.z, cfg, "z", 0.5);
    p2.alpha1 = resolve(args.alpha, cfg, "alpha", 0.0);
    p2.locality1 = hfts::LocalityParams(beta, kind);
    p2.k1 = window;
    p2.k2 = resolve(args.k2, cfg, "k2", window);
    const auto lag = resolve(args.lag, cfg, "lag", std::size_t{0});
    if (lag > 0) p2.lag = lag;
    p2.validate();
    return p2;
  }
  if (name == "mean") return hfts::MovingMeanConfig{window};
  throw std::invalid_argument("unknown predictor: " + name);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void echo_predictor_params(json& params, const PredictorArgs& args, const json& cfg) {
  params["window"] = resolve(args.window, cfg, "window", std::size_t{15});
  params["beta"] = resolve(args.beta, cfg, "beta", 0.45);
  params["alpha"] = resolve(args.alpha, cfg, "alpha", 0.0);
  params["z"] = resolve(args.z, cfg, "z", 0.5);
  params["k2"] = resolve(args.k2, cfg, "k2", resolve(args.window, cfg, "window", std::size_t{15}));
  params["lag"] = resolve(args.lag, cfg, "lag", std::size_t{0});
  params["depth-kind"] = resolve(args.depth_kind, cfg, "depth-kind", std::string("mbd"));
}

// ---------------------------------------------------------------- forecast

struct ForecastArgs {
  CommonArgs common;
  PredictorArgs predictor;
  std::optional<std::string> input;
  std::optional<std::string> hierarchy;
  std::optional<std::string> data_dir;
  std::optional<std::string> reconcile;
  std::optional<std::size_t> at;
};

int cmd_forecast(const ForecastArgs& args) {
  const json cfg = load_config(args.common.config);
  const fs::path out_dir = require_out(args.common.out, cfg);
  const hfts::Grid grid = resolve_grid(args.common, cfg, 120, 1.0);
  const std::string pred_name =
      resolve(args.predictor.predictor, cfg, "predictor", std::string("p1"));
  const hfts::PredictorMethod method = make_method(pred_name, args.predictor, cfg);
  const std::string hierarchy = resolve(args.hierarchy, cfg, "hierarchy", std::string());
  const std::string reconcile_name =
      resolve(args.reconcile, cfg, "reconcile", std::string("none"));

  json params;
  params["seed"] = resolve(args.common.seed, cfg, "seed", std::uint64_t{1});
  params["predictor"] = pred_name;
  echo_predictor_params(params, args.predictor, cfg);
  params["grid-points"] = grid.n_points;
  params["t-end"] = grid.t_end;
  params["reconcile"] = reconcile_name;

  if (hierarchy.empty()) {
    const std::string input = resolve(args.input, cfg, "input", std::string());
    if (input.empty()) throw std::invalid_argument("--input or --hierarchy is required");
    const hfts::FtsSeries series(grid, hfts::read_curves_csv(input, grid));
    const std::size_t at = resolve(args.at, cfg, "at", series.size());
    const hfts::Curve fc = hfts::forecast(series, method, at);
    hfts::write_curves_csv(out_dir / "forecast.csv", {fc});
    params["input"] = input;
    params["at"] = at;
    write_manifest(out_dir, "forecast", params);
    std::cout << "wrote one-step forecast from origin " << at << "\n";
    return 0;
  }

  const std::string data_dir = resolve(args.data_dir, cfg, "data-dir", std::string());
  if (data_dir.empty()) throw std::invalid_argument("--data-dir is required with --hierarchy");
  const hfts::HftsDataset data = hfts::read_dataset(hierarchy, data_dir, grid);
  const std::size_t at = resolve(args.at, cfg, "at", data.length());
  const hfts::Reconciler reconciler = hfts::reconciler_from_string(reconcile_name);

  const std::size_t m_nodes = data.hierarchy().node_count();
  std::vector<hfts::Curve> base;
  base.reserve(m_nodes);
  for (std::size_t node = 0; node < m_nodes; ++node)
    base.push_back(hfts::forecast(data.series(node), method, at));

  std::vector<hfts::Curve> result = base;
  if (reconciler == hfts::Reconciler::gls_robust) {
    // Dispersion from integrated squared base-forecast errors over all
    // origins with a realized successor.
    std::vector<std::vector<double>> ise(m_nodes);
    const std::size_t need = hfts::min_origin(method);
    for (std::size_t n = need; n + 1 <= at && n + 1 <= data.length(); ++n) {
      if (n == at) break;
      for (std::size_t node = 0; node < m_nodes; ++node) {
        const hfts::Curve fc = hfts::forecast(data.series(node), method, n);
        const double e =
            hfts::integrated_error(data.series(node).curves[n], fc, hfts::ErrorKind::aise) *
            grid.length();
        ise[node].push_back(e);
      }
    }
    hfts::DispersionMatrix w = hfts::DispersionMatrix::identity(m_nodes);
    bool enough = true;
    for (const auto& hist : ise)
      if (hist.size() < 2) enough = false;
    if (enough)
      w = hfts::robust_dispersion(ise, 1.0);
    else
      std::cerr << "warning: insufficient error history, identity W used\n";
    result = hfts::gls_reconcile(hfts::BaseForecasts(grid, base),
                                 hfts::build_summing_matrix(data.hierarchy()), w)
                 .full;
  }

  std::ofstream out(out_dir / "forecasts.csv", std::ios::binary);
  out << "node";
  for (std::size_t t = 0; t < grid.n_points; ++t) out << ",t" << t;
  out << "\n";
  for (std::size_t node = 0; node < m_nodes; ++node) {
    out << data.hierarchy().node_ids()[node];
    for (double v : result[node].values) out << "," << hfts::format_double(v);
    out << "\n";
  }
  params["hierarchy"] = hierarchy;
  params["data-dir"] = data_dir;
  params["at"] = at;
  write_manifest(out_dir, "forecast", params);
  std::cout << "wrote reconciled=" << reconcile_name << " forecasts for " << m_nodes
            << " nodes from origin " << at << "\n";
  return 0;
}

// ---------------------------------------------------------------- backtest

struct BacktestArgs {
  CommonArgs common;
  PredictorArgs predictor;
  std::optional<std::string> hierarchy;
  std::optional<std::string> data_dir;
  std::optional<std::string> reconcile;
  std::optional<std::string> metric;
  std::optional<std::size_t> origin_first;
  std::optional<std::size_t> origin_last;
};

int cmd_backtest(const BacktestArgs& args) {
  const json cfg = load_config(args.common.config);
  const fs::path out_dir = require_out(args.common.out, cfg);
  const hfts::Grid grid = resolve_grid(args.common, cfg, 120, 1.0);
  const std::string hierarchy = resolve(args.hierarchy, cfg, "hierarchy", std::string());
  const std::string data_dir = resolve(args.data_dir, cfg, "data-dir", std::string());
  if (hierarchy.empty() || data_dir.empty())
    throw std::invalid_argument("--hierarchy and --data-dir are required");

  const hfts::HftsDataset data = hfts::read_dataset(hierarchy, data_dir, grid);
  const std::string pred_list =
      resolve(args.predictor.predictor, cfg, "predictor", std::string("p1"));

  std::vector<hfts::PredictorSpec> predictors;
  std::size_t min_first = 0;
  for (const std::string& name : split_list(pred_list)) {
    hfts::PredictorSpec spec{name, make_method(name, args.predictor, cfg)};
    min_first = std::max(min_first, hfts::min_origin(spec.method));
    predictors.push_back(std::move(spec));
  }

  hfts::BacktestOptions options;
  options.reconciler = hfts::reconciler_from_string(
      resolve(args.reconcile, cfg, "reconcile", std::string("none")));
  options.metric =
      hfts::error_kind_from_string(resolve(args.metric, cfg, "metric", std::string("aiae")));
  const std::size_t first = resolve(args.origin_first, cfg, "origin-first", min_first);
  const std::size_t last = resolve(args.origin_last, cfg, "origin-last", data.length() - 1);

  const std::vector<hfts::BacktestReport> reports =
      hfts::compare_predictors(data, predictors, first, last, options);

  // MAD summary: rows = predictors, columns = nodes.
  std::ofstream mad_out(out_dir / "report_mad.csv", std::ios::binary);
  mad_out << "predictor";
  for (const std::string& id : data.hierarchy().node_ids()) mad_out << "," << id;
  mad_out << "\n";
  for (const hfts::BacktestReport& r : reports) {
    mad_out << r.predictor;
    for (double v : r.mad_summary) mad_out << "," << hfts::format_double(v);
    mad_out << "\n";
  }

  // Per-origin error series, long format, for external plotting.
  std::ofstream err_out(out_dir / "errors.csv", std::ios::binary);
  err_out << "predictor,node,origin,error\n";
  for (const hfts::BacktestReport& r : reports)
    for (std::size_t node = 0; node < r.node_ids.size(); ++node)
      for (std::size_t i = 0; i < r.origins.size(); ++i)
        err_out << r.predictor << "," << r.node_ids[node] << "," << r.origins[i] << ","
                << hfts::format_double(r.errors[node][i]) << "\n";

  for (const hfts::BacktestReport& r : reports)
    for (const std::string& w : r.warnings) std::cerr << "warning [" << r.predictor << "]: " << w << "\n";

  json params;
  params["seed"] = resolve(args.common.seed, cfg, "seed", std::uint64_t{1});
  params["predictor"] = pred_list;
  echo_predictor_params(params, args.predictor, cfg);
  params["hierarchy"] = hierarchy;
  params["data-dir"] = data_dir;
  params["reconcile"] = hfts::to_string(options.reconciler);
  params["metric"] = hfts::to_string(options.metric);
  params["origin-first"] = first;
  params["origin-last"] = last;
  params["grid-points"] = grid.n_points;
  params["t-end"] = grid.t_end;
  write_manifest(out_dir, "backtest", params);
  std::cout << "backtested " << reports.size() << " predictor(s) over origins " << first << ".."
            << last << "\n";
  return 0;
}

// ------------------------------------------------------------------ ingest

struct IngestArgs {
  CommonArgs common;
  std::vector<std::string> inputs;
  std::optional<std::size_t> periods_per_day;
  std::optional<std::string> regions;
  std::optional<std::string> total_id;
};

int cmd_ingest(const IngestArgs& args) {
  const json cfg = load_config(args.common.config);
  const fs::path out_dir = require_out(args.common.out, cfg);
  std::vector<std::string> inputs = args.inputs;
  if (inputs.empty() && cfg.contains("inputs"))
    inputs = cfg.at("inputs").get<std::vector<std::string>>();
  if (inputs.empty()) throw std::invalid_argument("demand CSV paths are required");
  const auto periods = resolve(args.periods_per_day, cfg, "periods-per-day", std::size_t{48});
  const std::string regions_list = resolve(args.regions, cfg, "regions", std::string());
  if (regions_list.empty()) throw std::invalid_argument("--regions is required");
  const std::string total_id = resolve(args.total_id, cfg, "total-id", std::string("total"));

  std::vector<fs::path> paths(inputs.begin(), inputs.end());
  const hfts::HftsDataset data =
      hfts::ingest_demand(paths, periods, split_list(regions_list), total_id);
  hfts::write_dataset(out_dir, data);

  json params;
  params["seed"] = resolve(args.common.seed, cfg, "seed", std::uint64_t{1});
  params["inputs"] = inputs;
  params["periods-per-day"] = periods;
  params["regions"] = regions_list;
  params["total-id"] = total_id;
  write_manifest(out_dir, "ingest", params);
  std::cout << "ingested " << data.length() << " days for " << data.hierarchy().leaf_count()
            << " regions\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hierarchical functional time series forecasting toolkit"};
  app.require_subcommand(1);

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand("simulate", "generate seeded functional samples");
  add_common(sim, sim_args.common);
  sim->add_option("--model", sim_args.model, "sv | two-regime | far1 | wiener | bridge | garch");
  sim->add_option("--n-curves", sim_args.n_curves, "number of curves");
  sim->add_option("--a", sim_args.a, "regime 1 scale");
  sim->add_option("--b", sim_args.b, "regime 1 offset");
  sim->add_option("--c", sim_args.c, "regime 2 scale");
  sim->add_option("--d", sim_args.d, "regime 2 offset");
  sim->add_option("--eps", sim_args.eps, "curves drawn from the two-regime pool");
  sim->add_option("--m", sim_args.m, "regime 1 pool size");
  sim->add_option("--n", sim_args.n, "regime 2 pool size");
  sim->add_option("--rho", sim_args.rho, "FAR(1) kernel operator norm");
  sim->add_option("--omega", sim_args.omega, "GARCH omega");
  sim->add_option("--garch-alpha", sim_args.garch_alpha, "GARCH alpha");
  sim->add_option("--garch-beta", sim_args.garch_beta, "GARCH beta");

  DepthArgs depth_args;
  CLI::App* dep = app.add_subcommand("depth", "per-curve depth values for a sample");
  add_common(dep, depth_args.common);
  dep->add_option("--input", depth_args.input, "curve matrix CSV");
  dep->add_option("--beta", depth_args.beta, "locality level; 1 = global depth");
  dep->add_option("--depth-kind", depth_args.depth_kind, "cgbd | mbd");

  ForecastArgs fc_args;
  CLI::App* fc = app.add_subcommand("forecast", "one-step-ahead forecast");
  add_common(fc, fc_args.common);
  add_predictor_flags(fc, fc_args.predictor);
  fc->add_option("--input", fc_args.input, "curve matrix CSV (single series)");
  fc->add_option("--hierarchy", fc_args.hierarchy, "hierarchy file (node_id,parent_id)");
  fc->add_option("--data-dir", fc_args.data_dir, "directory of <node>.csv files");
  fc->add_option("--reconcile", fc_args.reconcile, "none | gls");
  fc->add_option("--at", fc_args.at, "1-based origin (default: series end)");

  BacktestArgs bt_args;
  CLI::App* bt = app.add_subcommand("backtest", "rolling backtest over a hierarchy");
  add_common(bt, bt_args.common);
  add_predictor_flags(bt, bt_args.predictor);
  bt->add_option("--hierarchy", bt_args.hierarchy, "hierarchy file (node_id,parent_id)");
  bt->add_option("--data-dir", bt_args.data_dir, "directory of <node>.csv files");
  bt->add_option("--reconcile", bt_args.reconcile, "none | gls");
  bt->add_option("--metric", bt_args.metric, "aiae | aise");
  bt->add_option("--origin-first", bt_args.origin_first, "first rolling origin");
  bt->add_option("--origin-last", bt_args.origin_last, "last rolling origin");

  IngestArgs in_args;
  CLI::App* ing = app.add_subcommand("ingest", "build a dataset from demand CSVs");
  add_common(ing, in_args.common);
  ing->add_option("files", in_args.inputs, "demand CSV files");
  ing->add_option("--periods-per-day", in_args.periods_per_day, "intra-day period count");
  ing->add_option("--regions", in_args.regions, "comma-separated region ids");
  ing->add_option("--total-id", in_args.total_id, "id of the summed total node");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sim->parsed()) return cmd_simulate(sim_args);
    if (dep->parsed()) return cmd_depth(depth_args);
    if (fc->parsed()) return cmd_forecast(fc_args);
    if (bt->parsed()) return cmd_backtest(bt_args);
    if (ing->parsed()) return cmd_ingest(in_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
