#include "hfts/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hfts {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // Trim surrounding whitespace and optional quotes.
    auto b = field.find_first_not_of(" \t\r\"");
    auto e = field.find_last_not_of(" \t\r\"");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

bool parse_number(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

void write_curves_csv(const fs::path& path, const std::vector<Curve>& curves) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  if (curves.empty()) throw std::invalid_argument("no curves to write");
  const std::size_t g = curves.front().size();
  for (std::size_t t = 0; t < g; ++t) out << (t ? "," : "") << "t" << t;
  out << "\n";
  for (const Curve& c : curves) {
    for (std::size_t t = 0; t < g; ++t) out << (t ? "," : "") << format_double(c.values[t]);
    out << "\n";
  }
}

std::vector<Curve> read_curves_csv(const fs::path& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  std::vector<Curve> curves;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_csv_line(line);
    double probe;
    if (line_no == 1 && !fields.empty() && !parse_number(fields[0], probe)) continue;  // header
    if (fields.size() != grid.n_points)
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(grid.n_points) + " columns, got " +
                               std::to_string(fields.size()));
    std::vector<double> v(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i)
      if (!parse_number(fields[i], v[i]))
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                 ": non-numeric value '" + fields[i] + "'");
    curves.emplace_back(grid, std::move(v));
  }
  if (curves.empty()) throw std::runtime_error(path.string() + ": no curves");
  return curves;
}

HierarchySpec read_hierarchy(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  std::vector<std::string> ids, parents;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv_line(line);
    if (lower(fields[0]) == "node_id") continue;  // optional header
    if (fields.size() > 2 || fields.empty())
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected 'node_id,parent_id'");
    ids.push_back(fields[0]);
    parents.push_back(fields.size() == 2 ? fields[1] : "");
  }
  return HierarchySpec(std::move(ids), std::move(parents));
}

void write_hierarchy(const fs::path& path, const HierarchySpec& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  // Re-derive parent links from the children lists.
  std::vector<std::string> parent(h.node_count());
  for (std::size_t i = 0; i < h.node_count(); ++i)
    for (std::size_t c : h.children(i)) parent[c] = h.node_ids()[i];
  for (std::size_t i = 0; i < h.node_count(); ++i)
    out << h.node_ids()[i] << "," << parent[i] << "\n";
}

void write_dataset(const fs::path& dir, const HftsDataset& data) {
  fs::create_directories(dir);
  write_hierarchy(dir / "hierarchy.csv", data.hierarchy());
  for (std::size_t i = 0; i < data.hierarchy().node_count(); ++i)
    write_curves_csv(dir / (data.hierarchy().node_ids()[i] + ".csv"),
                     data.series(i).curves);
}

HftsDataset read_dataset(const fs::path& hierarchy_path, const fs::path& data_dir,
                         const Grid& grid) {
  const HierarchySpec h = read_hierarchy(hierarchy_path);
  // Prefer full per-node data (validated); fall back to leaf-only (summed).
  bool all_present = true;
  for (const std::string& id : h.node_ids())
    if (!fs::exists(data_dir / (id + ".csv"))) all_present = false;

  if (all_present) {
    std::vector<FtsSeries> series;
    series.reserve(h.node_count());
    for (const std::string& id : h.node_ids())
      series.emplace_back(grid, read_curves_csv(data_dir / (id + ".csv"), grid), id);
    return HftsDataset::validated(h, std::move(series));
  }

  std::vector<FtsSeries> leaves;
  leaves.reserve(h.leaf_count());
  for (const std::string& id : h.leaf_ids()) {
    const fs::path p = data_dir / (id + ".csv");
    if (!fs::exists(p)) throw std::runtime_error("missing leaf data file: " + p.string());
    leaves.emplace_back(grid, read_curves_csv(p, grid), id);
  }
  return HftsDataset::from_leaves(h, std::move(leaves));
}

HftsDataset read_dataset(const fs::path& dir, const Grid& grid) {
  return read_dataset(dir / "hierarchy.csv", dir, grid);
}

namespace {

struct ParsedStamp {
  std::string date;    // YYYY-MM-DD, separators normalized
  std::string full;    // normalized full stamp for ordering
};

ParsedStamp parse_stamp(const std::string& raw, const std::string& context) {
  std::string s = raw;
  std::replace(s.begin(), s.end(), '/', '-');
  std::replace(s.begin(), s.end(), 'T', ' ');
  if (s.size() < 10 || s[4] != '-' || s[7] != '-')
    throw std::runtime_error(context + ": unparseable timestamp '" + raw + "'");
  return ParsedStamp{s.substr(0, 10), s};
}

}  // namespace

HftsDataset ingest_demand(const std::vector<fs::path>& csv_paths, std::size_t periods_per_day,
                          const std::vector<std::string>& regions, const std::string& total_id) {
  if (periods_per_day < 2) throw std::invalid_argument("periods_per_day must be at least 2");
  if (regions.empty()) throw std::invalid_argument("no regions requested");

  struct Row {
    std::string stamp;
    double demand;
  };
  std::map<std::string, std::map<std::string, std::vector<Row>>> by_region_day;

  for (const fs::path& path : csv_paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");
    const auto header = split_csv_line(line);
    int col_ts = -1, col_region = -1, col_demand = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
      const std::string name = lower(header[i]);
      if (name == "timestamp" || name == "settlementdate") col_ts = static_cast<int>(i);
      if (name == "region" || name == "regionid") col_region = static_cast<int>(i);
      if (name == "demand" || name == "totaldemand") col_demand = static_cast<int>(i);
    }
    if (col_ts < 0 || col_region < 0 || col_demand < 0)
      throw std::runtime_error(path.string() +
                               ": header must name timestamp, region and demand columns");

    std::size_t line_no = 1;
    std::map<std::string, std::string> last_stamp;  // per region, for ordering check
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line == "\r") continue;
      const auto fields = split_csv_line(line);
      const std::string context = path.string() + ":" + std::to_string(line_no);
      const auto max_col = static_cast<std::size_t>(std::max({col_ts, col_region, col_demand}));
      if (fields.size() <= max_col) throw std::runtime_error(context + ": too few columns");

      std::string region = fields[static_cast<std::size_t>(col_region)];
      double demand;
      if (!parse_number(fields[static_cast<std::size_t>(col_demand)], demand))
        throw std::runtime_error(context + ": non-numeric demand '" +
                                 fields[static_cast<std::size_t>(col_demand)] + "'");
      const ParsedStamp ts = parse_stamp(fields[static_cast<std::size_t>(col_ts)], context);

      auto it = last_stamp.find(region);
      if (it != last_stamp.end() && ts.full <= it->second)
        throw std::runtime_error(context + ": timestamps not strictly increasing for region '" +
                                 region + "'");
      last_stamp[region] = ts.full;
      by_region_day[region][ts.date].push_back(Row{ts.full, demand});
    }
  }

  for (const std::string& region : regions)
    if (by_region_day.find(region) == by_region_day.end())
      throw std::runtime_error("missing region '" + region + "' in the input files");

  // Every region must contribute the same complete days.
  std::vector<std::string> ragged;
  const auto& reference_days = by_region_day.at(regions.front());
  for (const std::string& region : regions) {
    for (const auto& [day, rows] : by_region_day.at(region))
      if (rows.size() != periods_per_day)
        ragged.push_back(region + " " + day + " (" + std::to_string(rows.size()) + " rows)");
  }
  if (!ragged.empty()) {
    std::string msg = "incomplete days rejected:";
    for (const std::string& r : ragged) msg += "\n  " + r;
    throw std::runtime_error(msg);
  }
  for (const std::string& region : regions) {
    const auto& days = by_region_day.at(region);
    if (days.size() != reference_days.size())
      throw std::runtime_error("region '" + region + "' covers a different set of days");
    for (const auto& [day, rows] : days)
      if (reference_days.find(day) == reference_days.end())
        throw std::runtime_error("region '" + region + "' has day " + day +
                                 " missing from region '" + regions.front() + "'");
  }

  const std::size_t g = periods_per_day;
  const Grid grid(0.0, 24.0 * static_cast<double>(g - 1) / static_cast<double>(g), g);

  std::vector<FtsSeries> leaf_series;
  leaf_series.reserve(regions.size());
  for (const std::string& region : regions) {
    std::vector<Curve> curves;
    for (const auto& [day, rows] : by_region_day.at(region)) {
      std::vector<double> v(g);
      for (std::size_t t = 0; t < g; ++t) v[t] = rows[t].demand;
      curves.emplace_back(grid, std::move(v));
    }
    leaf_series.emplace_back(grid, std::move(curves), region);
  }

  return HftsDataset::from_leaves(one_level_hierarchy(total_id, regions),
                                  std::move(leaf_series));
}

}  // namespace hfts
