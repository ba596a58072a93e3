#include "arbor/ck.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

#include "arbor/detail/flat_tree.hpp"
#include "arbor/errors.hpp"

namespace arbor {

namespace {

constexpr std::size_t kMaxCutEdges = 24;

using detail::FlatTree;

RootedTree trunk_without(const FlatTree& flat, const std::vector<std::size_t>& cut) {
  std::vector<bool> keep(flat.size(), true);
  for (std::size_t e : cut)
    for (std::size_t v = e; v < flat.subtree_end(e); ++v) keep[v] = false;
  return flat.induced(0, keep);
}

Cut make_cut(const FlatTree& flat, std::vector<std::size_t> edges) {
  std::vector<RootedTree> crowns;
  crowns.reserve(edges.size());
  for (std::size_t e : edges) crowns.push_back(flat.subtree(e));
  RootedTree trunk = trunk_without(flat, edges);
  return Cut{std::move(edges), Forest(std::move(crowns)), std::move(trunk)};
}

bool admissible(const FlatTree& flat, const std::vector<std::size_t>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && flat.is_ancestor(edges[i], edges[j])) return false;
  return true;
}

using PairKey = std::pair<RootedTree, RootedTree>;

// (pruning, trunk) -> trees of size n carrying that elementary cut, with
// multiplicity. Built once per size from the full enumeration.
const std::map<PairKey, TreeComb>& elementary_cut_index(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::map<PairKey, TreeComb>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::map<PairKey, TreeComb> index;
  for (const auto& x : enumerate_trees(n, kProductMaxVertices)) {
    const FlatTree flat(x);
    for (std::size_t v = 1; v < flat.size(); ++v)
      index[{flat.subtree(v), trunk_without(flat, {v})}].add(x, 1);
  }
  return cache.emplace(n, std::move(index)).first->second;
}

const TensorComb& tree_coproduct_ck(const RootedTree& t) {
  static std::mutex mutex;
  static std::map<RootedTree, TensorComb> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  TensorComb out;
  out.add(TensorPair{Forest(), Forest(t)}, 1);
  out.add(TensorPair{Forest(t), Forest()}, 1);
  for (const auto& cut : admissible_cuts(t)) out.add(TensorPair{cut.pruning, Forest(cut.trunk)}, 1);
  std::lock_guard lock(mutex);
  return cache.emplace(t, std::move(out)).first->second;
}

}  // namespace

bool is_admissible(const RootedTree& t, const std::vector<std::size_t>& edges) {
  const FlatTree flat(t);
  for (std::size_t e : edges)
    if (e == 0 || e >= flat.size()) throw DomainError("edge index out of range");
  return !edges.empty() && admissible(flat, edges);
}

std::vector<Cut> admissible_cuts(const RootedTree& t) {
  const std::size_t m = t.edge_count();
  if (m > kMaxCutEdges) throw ResourceError("too many edges for cut enumeration");
  const FlatTree flat(t);
  std::vector<Cut> cuts;
  std::vector<std::size_t> edges;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    edges.clear();
    for (std::size_t b = 0; b < m; ++b)
      if (mask >> b & 1U) edges.push_back(b + 1);
    if (admissible(flat, edges)) cuts.push_back(make_cut(flat, edges));
  }
  return cuts;
}

std::vector<Cut> elementary_cuts(const RootedTree& t) {
  const FlatTree flat(t);
  std::vector<Cut> cuts;
  for (std::size_t v = 1; v < flat.size(); ++v) cuts.push_back(make_cut(flat, {v}));
  return cuts;
}

TensorComb multiply(const TensorComb& x, const TensorComb& y) {
  TensorComb out;
  for (const auto& [px, cx] : x)
    for (const auto& [py, cy] : y)
      out.add(TensorPair{px.left * py.left, px.right * py.right}, cx * cy);
  return out;
}

TensorComb coproduct_ck(const Forest& f) {
  TensorComb out(TensorPair{Forest(), Forest()});
  for (const auto& t : f.trees()) out = multiply(out, tree_coproduct_ck(t));
  return out;
}

std::size_t graft_count(const RootedTree& t, const RootedTree& trunk, const RootedTree& x) {
  if (t.vertex_count() + trunk.vertex_count() != x.vertex_count()) return 0;
  std::size_t n = 0;
  for (const auto& cut : elementary_cuts(x))
    if (cut.pruning.trees().front() == t && cut.trunk == trunk) ++n;
  return n;
}

TreeComb graft(const RootedTree& t, const RootedTree& t2) {
  const auto& index = elementary_cut_index(t.vertex_count() + t2.vertex_count());
  auto it = index.find({t, t2});
  return it == index.end() ? TreeComb() : it->second;
}

TreeComb graft_sigma(const RootedTree& t, const RootedTree& t2) {
  const Rational weight = Rational(symmetry_factor(t)) * Rational(symmetry_factor(t2));
  TreeComb out;
  for (const auto& [x, n] : graft(t, t2)) {
    const Rational m = n * weight / Rational(symmetry_factor(x));
    if (!m.is_integer())
      throw InvariantError("non-integral grafting multiplicity " + m.str() + " for " +
                           t.encoding() + " -> " + t2.encoding() + " at " + x.encoding());
    out.add(x, m);
  }
  return out;
}

TreeComb graft_sigma_by_grafting(const RootedTree& t, const RootedTree& t2) {
  TreeComb out;
  for (std::size_t v = 0; v < t2.vertex_count(); ++v) out.add(graft_at(t, t2, v), 1);
  return out;
}

TreeComb lie_bracket_graft(const RootedTree& t, const RootedTree& t2) {
  return graft(t, t2) - graft(t2, t);
}

TreeComb graft(const TreeComb& a, const TreeComb& b) {
  return bilinear<RootedTree, RootedTree, RootedTree>(
      a, b, [](const RootedTree& x, const RootedTree& y) { return graft(x, y); });
}

TreeComb graft_sigma(const TreeComb& a, const TreeComb& b) {
  return bilinear<RootedTree, RootedTree, RootedTree>(
      a, b, [](const RootedTree& x, const RootedTree& y) { return graft_sigma(x, y); });
}

TreeComb graft_sigma_by_grafting(const TreeComb& a, const TreeComb& b) {
  return bilinear<RootedTree, RootedTree, RootedTree>(
      a, b, [](const RootedTree& x, const RootedTree& y) { return graft_sigma_by_grafting(x, y); });
}

}  // namespace arbor
