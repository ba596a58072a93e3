#include <doctest.h>

#include "arbor/cem.hpp"
#include "arbor/ck.hpp"
#include "arbor/errors.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

RootedTree tr(const char* s) { return parse_tree(s); }
TreeComb T(const char* s, long c = 1) { return TreeComb(tr(s), c); }
// Both slots in contraction normal form: "[]" is the unit.
TensorPair H(const char* l, const char* r) {
  return {parse_forest(l).without_single_vertices(), parse_forest(r).without_single_vertices()};
}

std::multiset<std::pair<std::string, std::string>> subforest_terms(const RootedTree& t) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (const auto& s : subforests(t)) out.emplace(s.as_forest.encoding(), s.contraction.encoding());
  return out;
}

std::size_t oracle_insert_count(const RootedTree& t, const RootedTree& u, const RootedTree& w) {
  std::size_t n = 0;
  for (const auto& [s, q] : oracle::subforest_terms(w.encoding()))
    n += s == t.encoding() && q == u.encoding();
  return n;
}

TreeComb oracle_insert(const RootedTree& t, const RootedTree& u, bool sigma) {
  TreeComb out;
  for (const auto& w : enumerate_trees(t.vertex_count() + u.vertex_count() - 1)) {
    const auto n = oracle_insert_count(t, u, w);
    if (!n) continue;
    if (sigma) {
      out.add(w, Rational(long(n * oracle::automorphisms(t.encoding()) * oracle::automorphisms(u.encoding())),
                          long(oracle::automorphisms(w.encoding()))));
    } else {
      out.add(w, long(n));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("subforests") {
  CHECK(subforests(tr("[[]]")).size() == 2);
  CHECK(subforests(tr("[[][]]")).size() == 4);

  using Terms = std::multiset<std::pair<std::string, std::string>>;
  CHECK(subforest_terms(tr("[[][]]")) ==
        Terms{{"", "[[][]]"}, {"[[]]", "[[]]"}, {"[[]]", "[[]]"}, {"[[][]]", "[]"}});

  const auto expected = Terms{{"", "[[][[]]]"},   {"[[][[]]]", "[]"}, {"[[]]", "[[][]]"},
                              {"[[]]", "[[][]]"}, {"[[]]", "[[[]]]"}, {"[[[]]]", "[[]]"},
                              {"[[][]]", "[[]]"}, {"[[]] [[]]", "[[]]"}};
  CHECK(subforest_terms(tr("[[][[]]]")) == expected);

  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n)) {
      CHECK_MESSAGE(subforest_terms(t) == oracle::subforest_terms(t.encoding()), t.encoding());
      for (const auto& s : subforests(t)) {
        CHECK(s.as_forest.edge_count() + s.contraction.edge_count() == t.edge_count());
        CHECK(contract(t, s.components) == s.contraction);
      }
    }
}

TEST_CASE("contract") {
  const auto t = tr("[[][[]]]");  // pre-order: 0 root, 1 leaf, 2 middle, 3 its leaf
  CHECK(contract(t, {}) == t);
  CHECK(contract(t, {{1, 2, 3}}) == RootedTree());
  CHECK(render(contract(t, {{2}})) == "[[][]]");
  CHECK(render(contract(t, {{1}})) == "[[[]]]");
  CHECK_THROWS_AS(contract(t, {{1, 3}}), DomainError);     // not connected
  CHECK_THROWS_AS(contract(t, {{1}, {2}}), DomainError);   // share the root
  CHECK_THROWS_AS(contract(t, {{4}}), DomainError);        // no such edge
  CHECK_THROWS_AS(contract(t, {{}}), DomainError);
}

TEST_CASE("contraction coproduct") {
  CHECK(coproduct_cem(parse_forest("[]")) == TensorComb(TensorPair{}));
  CHECK(coproduct_cem(parse_forest("[[]]")) == TensorComb{{H("[]", "[[]]"), 1}, {H("[[]]", "[]"), 1}});

  const TensorComb expected{{H("[]", "[[][[]]]"), 1}, {H("[[][[]]]", "[]"), 1}, {H("[[]]", "[[][]]"), 2},
                            {H("[[]]", "[[[]]]"), 1},  {H("[[[]]]", "[[]]"), 1},  {H("[[][]]", "[[]]"), 1},
                            {H("[[]] [[]]", "[[]]"), 1}};
  CHECK(coproduct_cem(parse_forest("[[][[]]]")) == expected);

  CHECK_THROWS_AS(coproduct_cem(parse_forest("[] [[]]")), DomainError);

  for (std::size_t d = 1; d <= 4; ++d)
    for (const auto& f : enumerate_forests(d, Grading::Edges))
      for (const auto& [p, c] : coproduct_cem(f)) CHECK(p.left.edge_count() + p.right.edge_count() == d);
}

TEST_CASE("insertion count") {
  CHECK(insert_count(tr("[[]]"), tr("[[][]]"), tr("[[][][]]")) == 3);
  CHECK(insert_count(tr("[[]]"), tr("[[][]]"), tr("[[[][]]]")) == 1);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& w : enumerate_trees(n))
      CHECK(insert_count(tr("[[]]"), RootedTree(), w) == (w == tr("[[]]") ? 1U : 0U));
  CHECK_THROWS_AS(insert_count(RootedTree(), tr("[[]]"), tr("[[]]")), DomainError);
}

TEST_CASE("insertion") {
  CHECK(insert(tr("[[]]"), tr("[[][]]")) == T("[[][[]]]", 2) + T("[[[][]]]") + T("[[][][]]", 3));
  CHECK(insert(tr("[[]]"), tr("[[]]")) == T("[[[]]]", 2) + T("[[][]]", 2));
  CHECK(insert(tr("[[]]"), RootedTree()) == T("[[]]"));
  CHECK_THROWS_AS(insert(RootedTree(), tr("[[]]")), DomainError);

  for (std::size_t i = 2; i <= 4; ++i)
    for (std::size_t j = 1; i + j <= 7; ++j)
      for (const auto& t : enumerate_trees(i))
        for (const auto& u : enumerate_trees(j)) CHECK(insert(t, u) == oracle_insert(t, u, false));
}

TEST_CASE("sigma insertion") {
  CHECK(insert_sigma(tr("[[]]"), tr("[[][]]")) == T("[[][[]]]", 4) + T("[[[][]]]") + T("[[][][]]"));
  CHECK(insert_sigma(tr("[[]]"), RootedTree()) == T("[[]]"));
  CHECK(insert_sigma(tr("[[]]"), tr("[[]]")) == T("[[[]]]", 2) + T("[[][]]"));

  for (std::size_t i = 2; i <= 4; ++i)
    for (std::size_t j = 1; i + j <= 7; ++j)
      for (const auto& t : enumerate_trees(i))
        for (const auto& u : enumerate_trees(j)) {
          const auto counted = insert_sigma(t, u);
          CHECK(counted == oracle_insert(t, u, true));
          CHECK(counted == insert_sigma_by_insertion(t, u));
          for (const auto& [w, c] : counted) CHECK(c.is_integer());
        }
}

TEST_CASE("insertion is compatible with the sigma rescaling") {
  for (std::size_t i = 2; i <= 4; ++i)
    for (std::size_t j = 2; i + j <= 6; ++j)
      for (const auto& t : enumerate_trees(i))
        for (const auto& u : enumerate_trees(j))
          CHECK(phi_scale(insert_sigma(t, u)) == insert(phi_scale(TreeComb(t)), phi_scale(TreeComb(u))));
}

TEST_CASE("coaction") {
  const TensorPair dot_one{Forest(), Forest()};
  CHECK(coaction_phi(Forest()) == TensorComb(dot_one));
  CHECK(coaction_phi(parse_forest("[]")) == TensorComb(TensorPair{Forest(), parse_forest("[]")}));
  CHECK(coaction_phi(parse_forest("[] []")) == TensorComb(TensorPair{Forest(), parse_forest("[] []")}));

  // Phi agrees with the contraction coproduct on trees with an edge.
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n)) {
      TensorComb expected;
      for (const auto& [p, c] : coproduct_cem(Forest(t))) {
        auto right = p.right.empty() ? parse_forest("[]") : p.right;
        expected.add({p.left, right}, c);
      }
      CHECK(coaction_phi(Forest(t)) == expected);
    }

  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& f : enumerate_forests(n, Grading::Vertices))
      for (const auto& [p, c] : coaction_phi(f)) CHECK(p.left.edge_count() + p.right.vertex_count() == n);
}
