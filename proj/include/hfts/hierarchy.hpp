#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

namespace hfts {

/// Tree of clusters. Node order used throughout (summing-matrix rows, data
/// sets, reports) is: root, then internal nodes in declaration order, then
/// leaves in declaration order.
class HierarchySpec {
 public:
  /// Build from (node id, parent id) pairs; the root has an empty parent id.
  HierarchySpec(std::vector<std::string> ids, std::vector<std::string> parents);

  std::size_t node_count() const { return order_.size(); }        // M
  std::size_t leaf_count() const { return leaf_order_.size(); }   // m

  const std::vector<std::string>& node_ids() const { return order_; }
  const std::vector<std::string>& leaf_ids() const { return leaf_order_; }
  const std::string& root_id() const { return order_.front(); }

  std::size_t index_of(const std::string& id) const;
  bool is_leaf(std::size_t node_index) const;

  /// Children of a node, as indices into node order.
  const std::vector<std::size_t>& children(std::size_t node_index) const {
    return children_[node_index];
  }

  /// Leaf columns covered by each node (descendant leaves).
  const std::vector<std::size_t>& leaf_columns(std::size_t node_index) const {
    return leaf_cols_[node_index];
  }

 private:
  std::vector<std::string> order_;       // node ids in canonical order
  std::vector<std::string> leaf_order_;  // leaf ids in canonical order
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::vector<std::size_t>> leaf_cols_;
};

/// 0/1 matrix mapping the m bottom-level series to all M series.
Eigen::MatrixXd build_summing_matrix(const HierarchySpec& h);

/// Two-level hierarchy: one root over the given leaves.
HierarchySpec one_level_hierarchy(const std::string& root_id,
                                  const std::vector<std::string>& leaf_ids);

}  // namespace hfts
