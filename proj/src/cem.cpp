#include "arbor/cem.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

#include "arbor/ck.hpp"
#include "arbor/detail/flat_tree.hpp"
#include "arbor/errors.hpp"

namespace arbor {

namespace {

using detail::FlatTree;

constexpr std::size_t kMaxSubforestEdges = 24;

// rep[v] is the topmost vertex of v's component under the edge set `in_set`.
std::vector<std::size_t> component_tops(const FlatTree& flat, const std::vector<bool>& in_set) {
  std::vector<std::size_t> rep(flat.size());
  for (std::size_t v = 0; v < flat.size(); ++v)
    rep[v] = (v != 0 && in_set[v]) ? rep[flat.parent(v)] : v;
  return rep;
}

Subforest make_subforest(const FlatTree& flat, const std::vector<bool>& in_set) {
  const auto rep = component_tops(flat, in_set);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 1; v < flat.size(); ++v)
    if (in_set[v]) groups[rep[v]].push_back(v);

  Subforest s;
  std::vector<RootedTree> parts;
  for (auto& [top, edges] : groups) {
    std::vector<bool> keep(flat.size(), false);
    keep[top] = true;
    for (std::size_t e : edges) keep[e] = true;
    parts.push_back(flat.induced(top, keep));
    s.components.push_back(std::move(edges));
  }
  s.as_forest = Forest(std::move(parts));
  s.contraction = flat.quotient(rep);
  return s;
}

// Sum over s of s (x) t/s with t/s kept as a Connes-Kreimer tree.
const TensorComb& raw_tree_coaction(const RootedTree& t) {
  static std::mutex mutex;
  static std::map<RootedTree, TensorComb> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  TensorComb out;
  for (const auto& s : subforests(t)) out.add(TensorPair{s.as_forest, Forest(s.contraction)}, 1);
  std::lock_guard lock(mutex);
  return cache.emplace(t, std::move(out)).first->second;
}

// Calls emit(vertices) for every connected vertex set of exactly `size`
// vertices whose topmost vertex is `top`.
template <class Emit>
void connected_sets(const FlatTree& flat, std::size_t top, std::size_t size, Emit&& emit) {
  std::vector<std::size_t> chosen{top};
  std::vector<std::size_t> candidates(flat.children(top).begin(), flat.children(top).end());

  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (chosen.size() == size) {
      emit(chosen);
      return;
    }
    if (next == candidates.size()) return;
    const std::size_t c = candidates[next];
    // include c
    const std::size_t mark = candidates.size();
    chosen.push_back(c);
    candidates.insert(candidates.end(), flat.children(c).begin(), flat.children(c).end());
    self(self, next + 1);
    candidates.resize(mark);
    chosen.pop_back();
    // exclude c
    self(self, next + 1);
  };
  rec(rec, 0);
}

using PairKey = std::pair<RootedTree, RootedTree>;

// Visits (piece, w/piece) for every connected edge set with `edges` edges.
template <class Visit>
void for_each_piece(const RootedTree& w, std::size_t edges, Visit&& visit) {
  const FlatTree flat(w);
  for (std::size_t top = 0; top < flat.size(); ++top) {
    connected_sets(flat, top, edges + 1, [&](const std::vector<std::size_t>& vertices) {
      std::vector<bool> keep(flat.size(), false);
      std::vector<std::size_t> rep(flat.size());
      for (std::size_t v = 0; v < flat.size(); ++v) rep[v] = v;
      for (std::size_t v : vertices) {
        keep[v] = true;
        rep[v] = top;
      }
      visit(flat.induced(top, keep), flat.quotient(rep));
    });
  }
}

// (piece, contraction) -> trees of size n, for pieces with k edges.
const std::map<PairKey, TreeComb>& insertion_index(std::size_t n, std::size_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::map<PairKey, TreeComb>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find({n, k}); it != cache.end()) return it->second;
  std::map<PairKey, TreeComb> index;
  for (const auto& w : enumerate_trees(n, kProductMaxVertices))
    for_each_piece(w, k, [&](const RootedTree& piece, const RootedTree& rest) {
      index[{piece, rest}].add(w, 1);
    });
  return cache.emplace(std::make_pair(n, k), std::move(index)).first->second;
}

void require_edge(const RootedTree& t) {
  if (t.is_single_vertex())
    throw DomainError("left operand of ▷ must have ≥ 1 edge");
}

}  // namespace

std::vector<Subforest> subforests(const RootedTree& t) {
  const std::size_t m = t.edge_count();
  if (m > kMaxSubforestEdges) throw ResourceError("too many edges for subforest enumeration");
  const FlatTree flat(t);
  std::vector<Subforest> out;
  out.reserve(std::size_t{1} << m);
  std::vector<bool> in_set(flat.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t b = 0; b < m; ++b) in_set[b + 1] = (mask >> b & 1U) != 0;
    out.push_back(make_subforest(flat, in_set));
  }
  return out;
}

RootedTree contract(const RootedTree& t, const std::vector<std::vector<std::size_t>>& components) {
  const FlatTree flat(t);
  std::vector<bool> in_set(flat.size(), false);
  std::vector<int> owner(flat.size(), -1);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& comp = components[i];
    if (comp.empty()) throw DomainError("subforest component without edges");
    std::vector<std::size_t> vertices;
    for (std::size_t e : comp) {
      if (e == 0 || e >= flat.size()) throw DomainError("edge index out of range");
      if (in_set[e]) throw DomainError("edge listed twice in subforest");
      in_set[e] = true;
      vertices.push_back(e);
      vertices.push_back(flat.parent(e));
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.size() != comp.size() + 1) throw DomainError("subforest component is not connected");
    for (std::size_t v : vertices) {
      if (owner[v] != -1) throw DomainError("subforest components share a vertex");
      owner[v] = static_cast<int>(i);
    }
  }
  return flat.quotient(component_tops(flat, in_set));
}

TensorComb coproduct_cem(const Forest& f) {
  const bool has_single = std::any_of(f.trees().begin(), f.trees().end(),
                                      [](const RootedTree& t) { return t.is_single_vertex(); });
  if (has_single && f.size() > 1)
    throw DomainError("forest '" + f.encoding() +
                      "' mixes the single vertex with other trees; not a basis element");
  TensorComb out(TensorPair{Forest(), Forest()});
  if (has_single) return out;
  for (const auto& t : f.trees()) {
    TensorComb dt;
    for (const auto& [p, c] : raw_tree_coaction(t))
      dt.add(TensorPair{p.left, p.right.without_single_vertices()}, c);
    out = multiply(out, dt);
  }
  return out;
}

std::size_t insert_count(const RootedTree& t, const RootedTree& u, const RootedTree& w) {
  require_edge(t);
  if (t.vertex_count() + u.vertex_count() != w.vertex_count() + 1) return 0;
  std::size_t n = 0;
  for_each_piece(w, t.edge_count(), [&](const RootedTree& piece, const RootedTree& rest) {
    if (piece == t && rest == u) ++n;
  });
  return n;
}

TreeComb insert(const RootedTree& t, const RootedTree& u) {
  require_edge(t);
  const auto& index = insertion_index(t.vertex_count() + u.vertex_count() - 1, t.edge_count());
  auto it = index.find({t, u});
  return it == index.end() ? TreeComb() : it->second;
}

TreeComb insert_sigma(const RootedTree& t, const RootedTree& u) {
  const Rational weight = Rational(symmetry_factor(t)) * Rational(symmetry_factor(u));
  TreeComb out;
  for (const auto& [w, n] : insert(t, u)) {
    const Rational m = n * weight / Rational(symmetry_factor(w));
    if (!m.is_integer())
      throw InvariantError("non-integral insertion multiplicity " + m.str() + " for " +
                           t.encoding() + " |> " + u.encoding() + " at " + w.encoding());
    out.add(w, m);
  }
  return out;
}

TreeComb insert_sigma_by_insertion(const RootedTree& t, const RootedTree& u) {
  require_edge(t);
  const FlatTree host(u);
  const FlatTree piece(t);
  const std::size_t nu = host.size();
  const std::size_t nt = piece.size();
  TreeComb out;
  for (std::size_t v = 0; v < nu; ++v) {
    const auto& orphans = host.children(v);
    std::vector<std::size_t> slot(orphans.size(), 0);
    for (;;) {
      // Vertex v of u becomes the root of t; t's other vertices are appended.
      std::vector<std::vector<std::size_t>> kids(nu + nt - 1);
      auto id = [&](std::size_t j) { return j == 0 ? v : nu + j - 1; };
      for (std::size_t x = 0; x < nu; ++x)
        if (x != v) kids[x] = host.children(x);
      for (std::size_t j = 0; j < nt; ++j)
        for (std::size_t c : piece.children(j)) kids[id(j)].push_back(id(c));
      for (std::size_t i = 0; i < orphans.size(); ++i) kids[id(slot[i])].push_back(orphans[i]);
      out.add(detail::build_tree(kids, 0), 1);

      std::size_t i = 0;
      while (i < slot.size() && ++slot[i] == nt) slot[i++] = 0;
      if (i == slot.size()) break;
    }
  }
  return out;
}

TreeComb insert(const TreeComb& a, const TreeComb& b) {
  return bilinear<RootedTree, RootedTree, RootedTree>(
      a, b, [](const RootedTree& x, const RootedTree& y) { return insert(x, y); });
}

TreeComb insert_sigma(const TreeComb& a, const TreeComb& b) {
  return bilinear<RootedTree, RootedTree, RootedTree>(
      a, b, [](const RootedTree& x, const RootedTree& y) { return insert_sigma(x, y); });
}

TreeComb insert_sigma_by_insertion(const TreeComb& a, const TreeComb& b) {
  return bilinear<RootedTree, RootedTree, RootedTree>(
      a, b, [](const RootedTree& x, const RootedTree& y) { return insert_sigma_by_insertion(x, y); });
}

TensorComb coaction_phi(const Forest& f) {
  TensorComb out(TensorPair{Forest(), Forest()});
  for (const auto& t : f.trees()) out = multiply(out, raw_tree_coaction(t));
  return out;
}

}  // namespace arbor
