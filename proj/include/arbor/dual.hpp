#pragma once

#include "arbor/lincomb.hpp"
#include "arbor/serialize.hpp"
#include "arbor/tree.hpp"

namespace arbor {

/// Finite combination of dual basis functionals. On the H side the basis is
/// Z_f, f a forest of the contraction algebra in normal form (Z of the empty
/// forest is Z_•); on the CK side it is delta_f, f a Connes-Kreimer forest
/// (delta of the empty forest is the counit e).
class DualElement {
 public:
  explicit DualElement(Algebra side) : side_(side) {}
  DualElement(Algebra side, ForestComb terms);

  static DualElement Z(const Forest& f);
  static DualElement Z(const TreeComb& trees);
  static DualElement delta(const Forest& f);
  static DualElement delta(const TreeComb& trees);
  /// Z_•, neutral for the H-side convolution and for the action.
  static DualElement Z_unit() { return Z(Forest()); }
  /// e = delta of the empty forest, neutral for the CK-side convolution.
  static DualElement counit() { return delta(Forest()); }

  Algebra side() const noexcept { return side_; }
  const ForestComb& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  DualElement& operator+=(const DualElement& o);
  DualElement& operator-=(const DualElement& o);
  friend DualElement operator+(DualElement a, const DualElement& b) { return a += b; }
  friend DualElement operator-(DualElement a, const DualElement& b) { return a -= b; }
  friend DualElement operator*(const Rational& c, DualElement a) {
    a.terms_ *= c;
    return a;
  }
  friend bool operator==(const DualElement&, const DualElement&) = default;

 private:
  Algebra side_;
  ForestComb terms_;
};

/// <a, f> for a basis forest f of `algebra`. Throws DomainError on a side
/// mismatch.
Rational pair(const DualElement& a, const Forest& f, Algebra algebra);

/// Convolution dual to the contraction coproduct:
/// <alpha * beta, f> = <alpha (x) beta, Delta(f)>.
DualElement convolve_H(const DualElement& alpha, const DualElement& beta);

/// Convolution dual to the Connes-Kreimer coproduct.
DualElement convolve_CK(const DualElement& a, const DualElement& b);

/// Action of the H-side dual on the CK-side dual through the coaction:
/// <alpha * a, f> = <alpha (x) a, Phi(f)>.
DualElement act(const DualElement& alpha, const DualElement& a);

/// Coproduct dual to the forest product of the contraction algebra. The
/// coefficient of Z_g (x) Z_h is <alpha, g h>.
TensorComb dual_coproduct_H(const DualElement& alpha);

/// Keeps exactly the single-tree terms; the unit term and multi-tree terms go
/// to zero. Works on either side.
DualElement project_primitive(const DualElement& x);
/// x - project_primitive(x)
DualElement complement(const DualElement& x);

/// Text / JSON with "Z:" or "d:" prefixed keys.
std::string to_text(const DualElement& x);
nlohmann::json to_json(const DualElement& x);

}  // namespace arbor
