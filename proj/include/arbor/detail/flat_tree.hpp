#pragma once

#include <cstddef>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor::detail {

/// Index view of a canonical tree. Vertices are numbered in pre-order, so
/// vertex 0 is the root and the edge above vertex v (v >= 1) is named by v.
/// Pre-order indices and child-paths determine each other in a canonical
/// tree, so either identifies an edge.
class FlatTree {
 public:
  explicit FlatTree(const RootedTree& tree);

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t parent(std::size_t v) const { return parent_[v]; }
  const std::vector<std::size_t>& children(std::size_t v) const { return children_[v]; }
  /// One past the last pre-order index inside the subtree of v.
  std::size_t subtree_end(std::size_t v) const { return end_[v]; }
  bool is_ancestor(std::size_t a, std::size_t v) const { return a <= v && v < end_[a]; }

  /// Full subtree hanging from v.
  RootedTree subtree(std::size_t v) const;

  /// Tree on the vertices with keep[v] true reachable from `root` through
  /// kept vertices.
  RootedTree induced(std::size_t root, const std::vector<bool>& keep) const;

  /// Quotient tree where each vertex v is merged into rep[v]. A class must be
  /// connected and rep[v] must be its topmost vertex.
  RootedTree quotient(const std::vector<std::size_t>& rep) const;

 private:
  std::vector<RootedTree> subtrees_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> end_;
};

/// Canonical tree from an adjacency list (children per vertex) rooted at `root`.
RootedTree build_tree(const std::vector<std::vector<std::size_t>>& children, std::size_t root);

}  // namespace arbor::detail
