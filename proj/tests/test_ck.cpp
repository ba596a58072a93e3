#include <doctest.h>

#include "arbor/ck.hpp"
#include "arbor/errors.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

RootedTree tr(const char* s) { return parse_tree(s); }
TreeComb T(const char* s, long c = 1) { return TreeComb(tr(s), c); }
TensorPair P(const char* l, const char* r) { return {parse_forest(l), parse_forest(r)}; }

std::multiset<std::pair<std::string, std::string>> cut_terms(const RootedTree& t) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (const auto& c : admissible_cuts(t)) out.emplace(c.pruning.encoding(), c.trunk.encoding());
  return out;
}

TreeComb sigma_rescaled_graft(const RootedTree& a, const RootedTree& b) {
  // Oracle: N from the brute-force cut count, rescaled by the brute-force
  // automorphism counts.
  TreeComb out;
  const auto sa = oracle::automorphisms(a.encoding());
  const auto sb = oracle::automorphisms(b.encoding());
  for (const auto& x : oracle::trees_by_leaf_addition(a.vertex_count() + b.vertex_count())) {
    const auto n = oracle::graft_count(a.encoding(), b.encoding(), x);
    if (n) out.add(parse_tree(x), Rational(long(n * sa * sb), long(oracle::automorphisms(x))));
  }
  return out;
}

}  // namespace

TEST_CASE("admissible cuts") {
  const auto ladder = admissible_cuts(tr("[[]]"));
  REQUIRE(ladder.size() == 1);
  CHECK(ladder[0].pruning == parse_forest("[]"));
  CHECK(ladder[0].trunk == RootedTree());
  CHECK(ladder[0].elementary());

  using Terms = std::multiset<std::pair<std::string, std::string>>;
  CHECK(cut_terms(tr("[[][[]]]")) == Terms{{"[]", "[[[]]]"},
                                           {"[[]]", "[[]]"},
                                           {"[]", "[[][]]"},
                                           {"[] [[]]", "[]"},
                                           {"[] []", "[[]]"}});
  CHECK(cut_terms(tr("[[][]]")) == Terms{{"[]", "[[]]"}, {"[]", "[[]]"}, {"[] []", "[]"}});
  CHECK(admissible_cuts(RootedTree()).empty());

  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n)) {
      CHECK_MESSAGE(cut_terms(t) == oracle::admissible_cuts(t.encoding()), t.encoding());
      for (const auto& c : admissible_cuts(t)) {
        CHECK(c.pruning.vertex_count() + c.trunk.vertex_count() == n);
        CHECK(c.pruning.size() == c.edges.size());
        CHECK(is_admissible(t, c.edges));
      }
    }
}

TEST_CASE("is_admissible") {
  const auto t = tr("[[][[]]]");  // pre-order: 0 root, 1 leaf, 2 middle, 3 its leaf
  CHECK(is_admissible(t, {1, 2}));
  CHECK(is_admissible(t, {1, 3}));
  CHECK_FALSE(is_admissible(t, {2, 3}));
  CHECK(elementary_cuts(t).size() == 3);
}

TEST_CASE("Connes-Kreimer coproduct") {
  CHECK(coproduct_ck(Forest()) == TensorComb(P("1", "1")));
  CHECK(coproduct_ck(parse_forest("[]")) == TensorComb{{P("1", "[]"), 1}, {P("[]", "1"), 1}});

  const TensorComb expected{{P("1", "[[][[]]]"), 1}, {P("[[][[]]]", "1"), 1}, {P("[]", "[[[]]]"), 1},
                            {P("[[]]", "[[]]"), 1},  {P("[]", "[[][]]"), 1},  {P("[[]] []", "[]"), 1},
                            {P("[] []", "[[]]"), 1}};
  const auto got = coproduct_ck(parse_forest("[[][[]]]"));
  CHECK(got == expected);
  CHECK(got.size() == 7);

  CHECK(coproduct_ck(parse_forest("[] []")) ==
        TensorComb{{P("1", "[] []"), 1}, {P("[]", "[]"), 2}, {P("[] []", "1"), 1}});

  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& f : enumerate_forests(n, Grading::Vertices))
      for (const auto& [p, c] : coproduct_ck(f)) CHECK(p.left.vertex_count() + p.right.vertex_count() == n);
}

TEST_CASE("graft count") {
  CHECK(graft_count(tr("[]"), tr("[[][]]"), tr("[[][][]]")) == 3);
  CHECK(graft_count(tr("[]"), tr("[[][]]"), tr("[[][[]]]")) == 1);
  CHECK(graft_count(tr("[[]]"), tr("[[]]"), tr("[[[[]]]]")) == 1);
  for (const auto& x : enumerate_trees(5))
    for (const auto& a : enumerate_trees(2))
      for (const auto& b : enumerate_trees(3))
        CHECK(graft_count(a, b, x) == oracle::graft_count(a.encoding(), b.encoding(), x.encoding()));
}

TEST_CASE("grafting") {
  CHECK(graft(tr("[]"), tr("[[]]")) == T("[[[]]]") + T("[[][]]", 2));
  CHECK(graft(tr("[]"), tr("[[][]]")) == T("[[][[]]]") + T("[[][][]]", 3));
  CHECK(graft(tr("[[]]"), tr("[[]]")) == T("[[[[]]]]") + T("[[][[]]]"));
  // A tree grafts onto a single vertex in exactly one way.
  CHECK(graft(tr("[[]]"), tr("[]")) == T("[[[]]]"));
  CHECK(oracle::graft_count("[[]]", "[]", "[[][]]") == 0);
}

TEST_CASE("sigma grafting") {
  CHECK(graft_sigma(tr("[]"), tr("[[][]]")) == T("[[][[]]]", 2) + T("[[][][]]"));
  CHECK(graft_sigma(tr("[]"), tr("[]")) == T("[[]]"));
  CHECK(graft_sigma(tr("[[]]"), tr("[[]]")) == T("[[[[]]]]") + T("[[][[]]]"));

  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; i + j <= 7; ++j)
      for (const auto& a : enumerate_trees(i))
        for (const auto& b : enumerate_trees(j)) {
          const auto counted = graft_sigma(a, b);
          CHECK(counted == graft_sigma_by_grafting(a, b));
          CHECK(counted == sigma_rescaled_graft(a, b));
          Rational total;
          for (const auto& [x, c] : counted) {
            CHECK(c.is_integer());
            total += c;
          }
          CHECK(total == Rational(long(b.vertex_count())));
        }
}

TEST_CASE("grafting bracket") {
  const auto t = tr("[[][]]");
  CHECK(lie_bracket_graft(t, t).empty());
  CHECK(lie_bracket_graft(tr("[]"), tr("[[]]")) == T("[[][]]", 2));

  // Jacobi for the commutator of a left pre-Lie product.
  const TreeComb a = T("[]"), b = T("[]"), c = T("[[]]");
  auto br = [](const TreeComb& x, const TreeComb& y) { return graft(x, y) - graft(y, x); };
  CHECK((br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).empty());
  const TreeComb d = T("[[][]]"), e = T("[[[]]]") + T("[]", 2);
  CHECK((br(a, br(d, e)) + br(d, br(e, a)) + br(e, br(a, d))).empty());
}

TEST_CASE("tensor multiplication") {
  const TensorComb x{{P("[]", "1"), 1}, {P("1", "[]"), 1}};
  CHECK(multiply(x, x) == TensorComb{{P("[] []", "1"), 1}, {P("[]", "[]"), 2}, {P("1", "[] []"), 1}});
  CHECK(multiply(x, TensorComb(P("1", "1"))) == x);
}
