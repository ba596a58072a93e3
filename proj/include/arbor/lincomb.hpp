#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "arbor/rational.hpp"
#include "arbor/tree.hpp"

namespace arbor {

/// Ordered pair of forests; the two slots live in different tensor factors
/// and are never identified with each other.
struct TensorPair {
  Forest left;
  Forest right;

  friend bool operator==(const TensorPair&, const TensorPair&) = default;
  friend std::strong_ordering operator<=>(const TensorPair&, const TensorPair&) = default;
};

struct TensorTriple {
  Forest first;
  Forest second;
  Forest third;

  friend bool operator==(const TensorTriple&, const TensorTriple&) = default;
  friend std::strong_ordering operator<=>(const TensorTriple&, const TensorTriple&) = default;
};

/// Finite formal sum of basis objects with exact rational coefficients.
/// Zero coefficients are never stored, so structural equality is equality of
/// vectors. Combinations over different basis kinds are distinct types and do
/// not mix.
template <class Key>
class LinComb {
 public:
  using key_type = Key;
  using const_iterator = typename std::map<Key, Rational>::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& k, const Rational& c = 1) { add(k, c); }
  LinComb(std::initializer_list<std::pair<Key, Rational>> terms) {
    for (const auto& [k, c] : terms) add(k, c);
  }

  void add(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational() : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

  /// Linear extension of a basis map f: Key -> LinComb<Out>.
  template <class Out, class F>
  LinComb<Out> map_linear(F&& f) const {
    LinComb<Out> out;
    for (const auto& [k, c] : terms_) {
      LinComb<Out> image = f(k);
      image *= c;
      out += image;
    }
    return out;
  }

 private:
  std::map<Key, Rational> terms_;
};

using TreeComb = LinComb<RootedTree>;
using ForestComb = LinComb<Forest>;
using TensorComb = LinComb<TensorPair>;
using TripleComb = LinComb<TensorTriple>;

/// Scales by c; scale(0, a) is the empty combination.
template <class Key>
LinComb<Key> scale(const Rational& c, LinComb<Key> a) {
  return a *= c;
}

/// Bilinear extension of a basis product.
template <class A, class B, class Out, class F>
LinComb<Out> bilinear(const LinComb<A>& a, const LinComb<B>& b, F&& product) {
  LinComb<Out> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      LinComb<Out> p = product(ka, kb);
      p *= ca * cb;
      out += p;
    }
  }
  return out;
}

/// Bilinear tensor product of two forest combinations.
TensorComb tensor(const ForestComb& a, const ForestComb& b);

/// Views a tree combination as a combination of one-tree forests.
ForestComb as_forests(const TreeComb& a);

/// Rescales each basis tree t by its symmetry factor.
TreeComb phi_scale(const TreeComb& a);
TreeComb phi_scale_inverse(const TreeComb& a);

}  // namespace arbor
