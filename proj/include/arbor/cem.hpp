#pragma once

#include <cstddef>
#include <vector>

#include "arbor/lincomb.hpp"
#include "arbor/tree.hpp"

namespace arbor {

/// Vertex-disjoint family of connected edge sets of a host tree, each with at
/// least one edge. The empty family is the trivial subforest. Edges are named
/// by the pre-order index of their lower endpoint.
struct Subforest {
  std::vector<std::vector<std::size_t>> components;
  Forest as_forest;        // each component as a tree rooted at its top vertex
  RootedTree contraction;  // host with every component collapsed to a point

  bool trivial() const noexcept { return components.empty(); }
};

/// All subforests of t, trivial and full one included: one per edge subset.
std::vector<Subforest> subforests(const RootedTree& t);

/// Collapses each component to a vertex. Throws DomainError unless the
/// components are nonempty, connected and pairwise vertex-disjoint.
RootedTree contract(const RootedTree& t, const std::vector<std::vector<std::size_t>>& components);

/// Coproduct of the contraction algebra, sum over s of s (x) t/s. Both factors
/// are in normal form (single vertices dropped), so the unit is the empty
/// forest. Accepts forests of trees with >= 1 edge, or the lone single vertex;
/// throws DomainError for a single vertex mixed with other trees.
TensorComb coproduct_cem(const Forest& f);

/// Number of connected edge sets s of w with s isomorphic to t and w/s
/// isomorphic to u. Throws DomainError if t has no edge.
std::size_t insert_count(const RootedTree& t, const RootedTree& u, const RootedTree& w);

/// t |> u = sum over w of insert_count(t, u, w) w. Throws DomainError if t
/// has no edge.
TreeComb insert(const RootedTree& t, const RootedTree& u);

/// t |>_sigma u with coefficients insert_count(t,u,w) sigma(t) sigma(u) / sigma(w).
/// Throws InvariantError if a coefficient is not an integer.
TreeComb insert_sigma(const RootedTree& t, const RootedTree& u);

/// Same product built directly: replace one vertex of u by a copy of t and
/// hang that vertex's children on vertices of t in every possible way.
TreeComb insert_sigma_by_insertion(const RootedTree& t, const RootedTree& u);

TreeComb insert(const TreeComb& a, const TreeComb& b);
TreeComb insert_sigma(const TreeComb& a, const TreeComb& b);
TreeComb insert_sigma_by_insertion(const TreeComb& a, const TreeComb& b);

/// Coaction of the contraction algebra on the Connes-Kreimer algebra:
/// Phi(1) = . (x) 1 and Phi(t) = sum over s of s (x) t/s, multiplicative.
/// The left factor is in contraction normal form; the right factor is a
/// Connes-Kreimer forest and keeps its single vertices.
TensorComb coaction_phi(const Forest& f);

}  // namespace arbor
