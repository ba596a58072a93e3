#pragma once

#include <string>

#include <json.hpp>

#include "arbor/lincomb.hpp"

namespace arbor {

/// Which Hopf algebra a forest slot belongs to. It only matters for the unit:
/// the empty forest is written "1" in the Connes-Kreimer algebra and "[]" in
/// the contraction algebra, whose unit is the single-vertex tree.
enum class Algebra { CK, H };

struct Style {
  Algebra left = Algebra::CK;
  Algebra right = Algebra::CK;
};

std::string forest_string(const Forest& f, Algebra algebra);
/// Parses a forest in the given algebra. For H, single vertices are the unit
/// and are dropped.
Forest forest_from_string(const std::string& text, Algebra algebra);

std::string term_string(const RootedTree& t, Style style = {});
std::string term_string(const Forest& f, Style style = {});
/// "<left> (x) <right>"
std::string term_string(const TensorPair& p, Style style = {});
/// First slot uses style.left, the other two style.right.
std::string term_string(const TensorTriple& p, Style style = {});

/// Sorted terms joined by " + " / " - ", unit coefficients omitted,
/// "0" for the empty combination.
template <class Key, class TermFn>
std::string format_text(const LinComb<Key>& a, TermFn&& term) {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : a) {
    Rational mag = c;
    if (c < Rational(0)) {
      out += first ? "-" : " - ";
      mag = -c;
    } else if (!first) {
      out += " + ";
    }
    if (mag != Rational(1)) out += mag.pretty() + "*";
    out += term(k);
    first = false;
  }
  return out;
}

/// [{"coeff": "p/q", "term": "..."}, ...] in key order.
template <class Key, class TermFn>
nlohmann::json format_json(const LinComb<Key>& a, TermFn&& term) {
  auto out = nlohmann::json::array();
  for (const auto& [k, c] : a) out.push_back({{"coeff", c.str()}, {"term", term(k)}});
  return out;
}

template <class Key>
std::string to_text(const LinComb<Key>& a, Style style = {}) {
  return format_text(a, [&](const Key& k) { return term_string(k, style); });
}

template <class Key>
nlohmann::json to_json(const LinComb<Key>& a, Style style = {}) {
  return format_json(a, [&](const Key& k) { return term_string(k, style); });
}

TreeComb tree_comb_from_json(const nlohmann::json& j);
ForestComb forest_comb_from_json(const nlohmann::json& j, Algebra algebra);
TensorComb tensor_comb_from_json(const nlohmann::json& j, Style style);

}  // namespace arbor
