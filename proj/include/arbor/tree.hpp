#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arbor {

/// Default ceiling for the public enumeration entry points.
inline constexpr std::size_t kDefaultMaxVertices = 8;

/// Ceiling used internally when products have to enumerate their target
/// degree. Sized for the default derivation sweep, which reaches 11 vertices.
inline constexpr std::size_t kProductMaxVertices = 14;

/// Total order on canonical encodings: shorter first, then lexicographic.
bool encoding_less(std::string_view a, std::string_view b) noexcept;

/// Unordered rooted tree held in canonical form.
///
/// Children are kept sorted by `encoding_less` on their encodings, so two
/// trees are isomorphic exactly when their encodings are equal. Nodes are
/// immutable and shared, copying a tree is cheap.
class RootedTree {
 public:
  /// The single-vertex tree.
  RootedTree();
  /// Root with the given children; canonicalizes.
  explicit RootedTree(std::vector<RootedTree> children);

  std::span<const RootedTree> children() const noexcept;
  std::size_t vertex_count() const noexcept;
  std::size_t edge_count() const noexcept { return vertex_count() - 1; }
  bool is_single_vertex() const noexcept { return vertex_count() == 1; }
  const std::string& encoding() const noexcept;

  friend bool operator==(const RootedTree& a, const RootedTree& b) noexcept {
    return a.node_ == b.node_ || a.encoding() == b.encoding();
  }
  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) noexcept;

 private:
  struct Node;
  static const std::shared_ptr<const Node>& leaf();
  std::shared_ptr<const Node> node_;
};

struct RootedTree::Node {
  std::vector<RootedTree> children;
  std::string code;
  std::size_t vertices = 1;
};

inline std::span<const RootedTree> RootedTree::children() const noexcept { return node_->children; }
inline std::size_t RootedTree::vertex_count() const noexcept { return node_->vertices; }
inline const std::string& RootedTree::encoding() const noexcept { return node_->code; }

/// Commutative monomial of trees (a multiset). The empty forest is the unit.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees);
  Forest(const RootedTree& tree);  // NOLINT: a tree is a one-factor forest

  std::span<const RootedTree> trees() const noexcept { return trees_; }
  std::size_t size() const noexcept { return trees_.size(); }
  bool empty() const noexcept { return trees_.empty(); }
  bool is_single_tree() const noexcept { return trees_.size() == 1; }
  std::size_t vertex_count() const noexcept;
  std::size_t edge_count() const noexcept;

  /// Trees joined by single spaces; "" for the empty forest.
  const std::string& encoding() const noexcept { return code_; }

  /// Drops single-vertex factors. In the contraction algebra the
  /// single-vertex tree is the unit, so this is its normal form.
  Forest without_single_vertices() const;

  friend Forest operator*(const Forest& a, const Forest& b);
  friend bool operator==(const Forest& a, const Forest& b) noexcept { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) noexcept;

 private:
  std::vector<RootedTree> trees_;
  std::string code_;
};

/// Parses T ::= "[" T* "]", whitespace allowed around and between siblings.
/// Throws ParseError.
RootedTree parse_tree(std::string_view text);

/// Whitespace-separated trees. "1" (or blank input) denotes the empty forest.
Forest parse_forest(std::string_view text);

inline const std::string& render(const RootedTree& t) { return t.encoding(); }

/// Number of automorphisms.
std::uint64_t symmetry_factor(const RootedTree& t);

/// All trees with `n` vertices in canonical-encoding order. Throws
/// DomainError for n == 0 and ResourceError for n > max_vertices.
const std::vector<RootedTree>& enumerate_trees(std::size_t n,
                                               std::size_t max_vertices = kDefaultMaxVertices);

enum class Grading {
  Vertices,  // forests of arbitrary trees, degree = vertex count
  Edges,     // forests of trees with >= 1 edge, degree = edge count
};

/// Basis forests of the given degree, sorted.
const std::vector<Forest>& enumerate_forests(std::size_t degree, Grading grading,
                                             std::size_t max_vertices = kDefaultMaxVertices);

/// Attaches `scion` as a new child of vertex `vertex` of `stock`, where
/// vertices are numbered in pre-order of the canonical form.
/// Throws DomainError if the index is out of range.
RootedTree graft_at(const RootedTree& scion, const RootedTree& stock, std::size_t vertex);

}  // namespace arbor
