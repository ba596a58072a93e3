#include "arbor/detail/flat_tree.hpp"

#include <limits>

namespace arbor::detail {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

}  // namespace

FlatTree::FlatTree(const RootedTree& tree) {
  const std::size_t n = tree.vertex_count();
  subtrees_.reserve(n);
  parent_.reserve(n);
  children_.reserve(n);
  end_.resize(n);

  struct Frame {
    RootedTree tree;
    std::size_t parent;
  };
  // Explicit pre-order walk; children pushed in reverse so they pop in order.
  std::vector<Frame> stack{{tree, kNoParent}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const std::size_t id = subtrees_.size();
    subtrees_.push_back(f.tree);
    parent_.push_back(f.parent);
    children_.emplace_back();
    if (f.parent != kNoParent) children_[f.parent].push_back(id);
    const auto kids = f.tree.children();
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, id});
  }
  for (std::size_t v = 0; v < n; ++v) end_[v] = v + subtrees_[v].vertex_count();
}

RootedTree FlatTree::subtree(std::size_t v) const { return subtrees_[v]; }

RootedTree FlatTree::induced(std::size_t root, const std::vector<bool>& keep) const {
  std::vector<RootedTree> kids;
  for (std::size_t c : children_[root])
    if (keep[c]) kids.push_back(induced(c, keep));
  return kids.empty() ? RootedTree() : RootedTree(std::move(kids));
}

RootedTree FlatTree::quotient(const std::vector<std::size_t>& rep) const {
  std::vector<std::vector<std::size_t>> kids(size());
  for (std::size_t v = 1; v < size(); ++v) {
    const std::size_t p = rep[parent_[v]];
    if (rep[v] == v && p != v) kids[p].push_back(v);
  }
  return build_tree(kids, rep[0]);
}

RootedTree build_tree(const std::vector<std::vector<std::size_t>>& children, std::size_t root) {
  if (children[root].empty()) return RootedTree();
  std::vector<RootedTree> kids;
  kids.reserve(children[root].size());
  for (std::size_t c : children[root]) kids.push_back(build_tree(children, c));
  return RootedTree(std::move(kids));
}

}  // namespace arbor::detail
