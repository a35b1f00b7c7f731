#include "hfts/hierarchy.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace hfts {

HierarchySpec::HierarchySpec(std::vector<std::string> ids, std::vector<std::string> parents) {
  if (ids.size() != parents.size())
    throw std::invalid_argument("hierarchy: ids and parents differ in length");
  if (ids.empty()) throw std::invalid_argument("hierarchy: empty node list");

  std::unordered_map<std::string, std::size_t> pos;  // declaration index
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].empty()) throw std::invalid_argument("hierarchy: empty node id");
    if (!pos.emplace(ids[i], i).second)
      throw std::invalid_argument("hierarchy: duplicate node id '" + ids[i] + "'");
  }

  std::vector<std::vector<std::size_t>> decl_children(ids.size());
  std::size_t root = ids.size();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (parents[i].empty()) {
      if (root != ids.size()) throw std::invalid_argument("hierarchy: multiple roots");
      root = i;
      continue;
    }
    auto it = pos.find(parents[i]);
    if (it == pos.end())
      throw std::invalid_argument("hierarchy: unknown parent '" + parents[i] + "' of '" +
                                  ids[i] + "'");
    if (it->second == i) throw std::invalid_argument("hierarchy: node '" + ids[i] +
                                                     "' is its own parent");
    decl_children[it->second].push_back(i);
  }
  if (root == ids.size()) throw std::invalid_argument("hierarchy: no root (cycle or missing)");

  // Reachability from the root doubles as the cycle check.
  std::vector<bool> seen(ids.size(), false);
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    for (std::size_t c : decl_children[v]) stack.push_back(c);
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (!seen[i])
      throw std::invalid_argument("hierarchy: node '" + ids[i] +
                                  "' is not reachable from the root (cycle?)");

  // Canonical order: root, internals by declaration, leaves by declaration.
  std::vector<std::size_t> decl_to_node(ids.size());
  order_.push_back(ids[root]);
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (i != root && !decl_children[i].empty()) order_.push_back(ids[i]);
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (i != root && decl_children[i].empty()) {
      order_.push_back(ids[i]);
      leaf_order_.push_back(ids[i]);
    }
  if (leaf_order_.empty()) {
    // Degenerate single-node tree: the root is the only (bottom-level) series.
    leaf_order_.push_back(ids[root]);
  }

  std::unordered_map<std::string, std::size_t> node_pos;
  for (std::size_t i = 0; i < order_.size(); ++i) node_pos.emplace(order_[i], i);

  children_.assign(order_.size(), {});
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t c : decl_children[i])
      children_[node_pos.at(ids[i])].push_back(node_pos.at(ids[c]));

  std::unordered_map<std::string, std::size_t> leaf_pos;
  for (std::size_t i = 0; i < leaf_order_.size(); ++i) leaf_pos.emplace(leaf_order_[i], i);

  // Descendant leaf columns, computed bottom-up over the canonical order
  // (children always come after their parent except in pathological
  // declaration orders, so recurse explicitly).
  leaf_cols_.assign(order_.size(), {});
  auto fill = [&](auto&& self, std::size_t v) -> void {
    if (children_[v].empty()) {
      leaf_cols_[v] = {leaf_pos.at(order_[v])};
      return;
    }
    for (std::size_t c : children_[v]) {
      self(self, c);
      leaf_cols_[v].insert(leaf_cols_[v].end(), leaf_cols_[c].begin(), leaf_cols_[c].end());
    }
    std::sort(leaf_cols_[v].begin(), leaf_cols_[v].end());
  };
  fill(fill, 0);
}

std::size_t HierarchySpec::index_of(const std::string& id) const {
  const auto it = std::find(order_.begin(), order_.end(), id);
  if (it == order_.end()) throw std::invalid_argument("hierarchy: unknown node '" + id + "'");
  return static_cast<std::size_t>(it - order_.begin());
}

bool HierarchySpec::is_leaf(std::size_t node_index) const {
  return children_[node_index].empty();
}

Eigen::MatrixXd build_summing_matrix(const HierarchySpec& h) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(h.node_count()),
                                            static_cast<Eigen::Index>(h.leaf_count()));
  for (std::size_t i = 0; i < h.node_count(); ++i)
    for (std::size_t col : h.leaf_columns(i))
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col)) = 1.0;
  return s;
}

HierarchySpec one_level_hierarchy(const std::string& root_id,
                                  const std::vector<std::string>& leaf_ids) {
  std::vector<std::string> ids{root_id};
  std::vector<std::string> parents{""};
  for (const std::string& leaf : leaf_ids) {
    ids.push_back(leaf);
    parents.push_back(root_id);
  }
  return HierarchySpec(std::move(ids), std::move(parents));
}

}  // namespace hfts
