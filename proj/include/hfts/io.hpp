#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hfts/eval.hpp"
#include "hfts/hierarchy.hpp"
#include "hfts/predict.hpp"

namespace hfts {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

/// Curve matrix CSV: one row per curve, G numeric columns, header "t0,t1,...".
void write_curves_csv(const std::filesystem::path& path, const std::vector<Curve>& curves);

/// Read a curve matrix CSV onto the given grid; a non-numeric first row is
/// treated as a header and skipped.
std::vector<Curve> read_curves_csv(const std::filesystem::path& path, const Grid& grid);

/// Hierarchy file: one line per node, "node_id,parent_id", root's parent empty.
HierarchySpec read_hierarchy(const std::filesystem::path& path);
void write_hierarchy(const std::filesystem::path& path, const HierarchySpec& h);

/// Dataset directory layout: hierarchy.csv plus <node_id>.csv per node.
/// Loading accepts leaf-only directories (internal nodes are summed).
void write_dataset(const std::filesystem::path& dir, const HftsDataset& data);
HftsDataset read_dataset(const std::filesystem::path& dir, const Grid& grid);
HftsDataset read_dataset(const std::filesystem::path& hierarchy_path,
                         const std::filesystem::path& data_dir, const Grid& grid);

/// One half-hourly (or other intra-day period) demand record.
struct DemandRecord {
  std::string timestamp;  // "YYYY-MM-DD HH:MM[:SS]" or with '/' separators
  std::string region;
  double demand = 0.0;
};

/// Parse demand CSVs (header must name timestamp/settlementdate,
/// region/regionid and demand/totaldemand columns) into one daily-curve
/// series per region plus a summed total node. Days with a row count other
/// than periods_per_day are rejected with the offending dates listed.
HftsDataset ingest_demand(const std::vector<std::filesystem::path>& csv_paths,
                          std::size_t periods_per_day, const std::vector<std::string>& regions,
                          const std::string& total_id = "total");

}  // namespace hfts
