#include <doctest.h>

#include <random>

#include "arbor/rational.hpp"
#include "arbor/serialize.hpp"

using namespace arbor;

namespace {

TreeComb T(const char* a) { return TreeComb(parse_tree(a)); }
ForestComb F(const char* a) { return ForestComb(parse_forest(a)); }

template <class A, class B>
concept Addable = requires(A a, B b) { a + b; };

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3).str() == "3/1");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(6, 3).pretty() == "2");
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(7, 2).is_integer() == false);
  CHECK(Rational(8, 2).is_integer());
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational(1) / Rational(0));

  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  for (int i = 0; i < 200; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a / a == Rational(1));
  }
}

TEST_CASE("lincomb addition") {
  const auto t = T("[[]]");
  CHECK((Rational(2) * t + Rational(-2) * t).empty());
  CHECK(t + t == Rational(2) * t);
  CHECK((T("[[[]]]") + Rational(2) * T("[[][]]")) + T("[[][]]") ==
        T("[[[]]]") + Rational(3) * T("[[][]]"));
  static_assert(Addable<TreeComb, TreeComb>);
  static_assert(!Addable<TreeComb, ForestComb>);
  static_assert(!Addable<ForestComb, TensorComb>);
}

TEST_CASE("lincomb scaling") {
  const auto a = T("[[]]") + Rational(3) * T("[[][]]");
  CHECK(scale(0, a).empty());
  CHECK(scale(1, a) == a);
  CHECK(scale(Rational(1, 2), Rational(2) * T("[]")) == T("[]"));
}

TEST_CASE("lincomb tensor") {
  const auto t = parse_forest("[[]]");
  const auto u = parse_forest("[]");
  const auto v = parse_forest("[[][]]");
  CHECK(tensor(ForestComb(t), ForestComb(u)) == TensorComb(TensorPair{t, u}));
  CHECK(tensor(ForestComb(t) + ForestComb(u), ForestComb(v)) ==
        TensorComb{{TensorPair{t, v}, 1}, {TensorPair{u, v}, 1}});
  CHECK(tensor(Rational(2) * ForestComb(t), Rational(3) * ForestComb(u)) ==
        TensorComb(TensorPair{t, u}, 6));
}

TEST_CASE("lincomb is linear") {
  std::mt19937 rng(11);
  const auto& pool = enumerate_forests(3, Grading::Vertices);
  auto random_comb = [&] {
    ForestComb a;
    for (int i = 0; i < 3; ++i) a.add(pool[rng() % pool.size()], Rational(long(rng() % 7) - 3, 1 + rng() % 3));
    return a;
  };
  for (int i = 0; i < 50; ++i) {
    const auto a = random_comb(), b = random_comb(), c = random_comb();
    const Rational s(long(rng() % 9) - 4, 1 + rng() % 4);
    CHECK(tensor(a + b, c) == tensor(a, c) + tensor(b, c));
    CHECK(tensor(a, b + c) == tensor(a, b) + tensor(a, c));
    CHECK(tensor(s * a, b) == s * tensor(a, b));
    CHECK(s * (a + b) == s * a + s * b);
  }
}

TEST_CASE("phi scaling") {
  CHECK(phi_scale(T("[]")) == T("[]"));
  CHECK(phi_scale(T("[[][]]")) == Rational(2) * T("[[][]]"));
  CHECK(phi_scale(T("[[][][]]") + T("[[][[]]]")) == Rational(6) * T("[[][][]]") + T("[[][[]]]"));
  TreeComb all;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n)) all.add(t, Rational(long(n), 3));
  CHECK(phi_scale_inverse(phi_scale(all)) == all);
  CHECK(phi_scale(phi_scale_inverse(all)) == all);
}

TEST_CASE("text rendering") {
  CHECK(to_text(TreeComb()) == "0");
  CHECK(to_text(Rational(2) * T("[[]]") - T("[]")) == "-[] + 2*[[]]");
  CHECK(to_text(Rational(1, 2) * T("[]")) == "1/2*[]");
  const TensorComb unit(TensorPair{Forest(), Forest()});
  CHECK(to_text(unit) == "1 (x) 1");
  CHECK(to_text(unit, {Algebra::H, Algebra::H}) == "[] (x) []");
  CHECK(to_text(F("[] [[]]")) == "[] [[]]");
}

TEST_CASE("json round trip") {
  const auto a = Rational(-3, 4) * T("[[][]]") + T("[]");
  const auto j = to_json(a);
  REQUIRE(j.is_array());
  CHECK(j[0]["coeff"] == "1/1");
  CHECK(j[0]["term"] == "[]");
  CHECK(j[1]["coeff"] == "-3/4");
  CHECK(tree_comb_from_json(j) == a);

  const auto f = F("[] []") + Rational(5) * F("1");
  CHECK(forest_comb_from_json(to_json(f), Algebra::CK) == f);

  const Style h{Algebra::H, Algebra::H};
  const TensorComb p{{TensorPair{Forest(), parse_forest("[[]]")}, 1},
                     {TensorPair{parse_forest("[[]] [[]]"), Forest()}, 2}};
  CHECK(tensor_comb_from_json(to_json(p, h), h) == p);
  CHECK(to_json(p, h)[0]["term"] == "[] (x) [[]]");
}
