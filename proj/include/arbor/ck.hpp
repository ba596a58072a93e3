#pragma once

#include <cstddef>
#include <vector>

#include "arbor/lincomb.hpp"
#include "arbor/tree.hpp"

namespace arbor {

/// A nonempty set of edges of a host tree together with what it cuts off.
/// Edges are named by the pre-order index of their lower endpoint in the
/// host's canonical form.
struct Cut {
  std::vector<std::size_t> edges;
  Forest pruning;     // the crowns that fall off
  RootedTree trunk;   // the part still holding the root

  bool elementary() const noexcept { return edges.size() == 1; }
};

/// True iff no root-to-vertex path meets two of the given edges.
bool is_admissible(const RootedTree& t, const std::vector<std::size_t>& edges);

/// Every admissible cut of t (empty for the single-vertex tree).
std::vector<Cut> admissible_cuts(const RootedTree& t);
std::vector<Cut> elementary_cuts(const RootedTree& t);

/// Connes-Kreimer coproduct; multiplicative on forests, 1 (x) 1 on the unit.
TensorComb coproduct_ck(const Forest& f);

/// Number of elementary cuts of x with pruning t and trunk trunk.
std::size_t graft_count(const RootedTree& t, const RootedTree& trunk, const RootedTree& x);

/// t -> t': sum over trees x of graft_count(t, t', x) x. Computed by counting
/// elementary cuts over all trees of the target size, never by grafting.
TreeComb graft(const RootedTree& t, const RootedTree& t2);

/// t ->_sigma t' with coefficients N(t,t',x) sigma(t) sigma(t') / sigma(x).
/// Throws InvariantError if a coefficient is not an integer.
TreeComb graft_sigma(const RootedTree& t, const RootedTree& t2);

/// Same product by attaching t at every vertex of t' in turn.
TreeComb graft_sigma_by_grafting(const RootedTree& t, const RootedTree& t2);

/// (t -> t') - (t' -> t)
TreeComb lie_bracket_graft(const RootedTree& t, const RootedTree& t2);

TreeComb graft(const TreeComb& a, const TreeComb& b);
TreeComb graft_sigma(const TreeComb& a, const TreeComb& b);
TreeComb graft_sigma_by_grafting(const TreeComb& a, const TreeComb& b);

/// Componentwise product of tensor combinations: (a (x) b)(c (x) d) = ac (x) bd.
TensorComb multiply(const TensorComb& x, const TensorComb& y);

}  // namespace arbor
