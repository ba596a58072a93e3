#include "arbor/lincomb.hpp"

namespace arbor {

TensorComb tensor(const ForestComb& a, const ForestComb& b) {
  TensorComb out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(TensorPair{fa, fb}, ca * cb);
  return out;
}

ForestComb as_forests(const TreeComb& a) {
  ForestComb out;
  for (const auto& [t, c] : a) out.add(Forest(t), c);
  return out;
}

TreeComb phi_scale(const TreeComb& a) {
  TreeComb out;
  for (const auto& [t, c] : a) out.add(t, c * Rational(symmetry_factor(t)));
  return out;
}

TreeComb phi_scale_inverse(const TreeComb& a) {
  TreeComb out;
  for (const auto& [t, c] : a) out.add(t, c / Rational(symmetry_factor(t)));
  return out;
}

}  // namespace arbor
