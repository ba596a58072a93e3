#include "arbor/serialize.hpp"

#include "arbor/errors.hpp"

namespace arbor {

namespace {

constexpr std::string_view kTensorSep = " (x) ";

template <class Key, class Parse>
LinComb<Key> comb_from_json(const nlohmann::json& j, Parse parse) {
  if (!j.is_array()) throw ParseError("linear combination JSON must be an array", 0);
  LinComb<Key> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& item = j[i];
    if (!item.is_object() || !item.contains("coeff") || !item.contains("term"))
      throw ParseError("term object needs \"coeff\" and \"term\"", i);
    out.add(parse(item.at("term").get<std::string>()),
            Rational::parse(item.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace

std::string forest_string(const Forest& f, Algebra algebra) {
  if (f.empty()) return algebra == Algebra::CK ? "1" : "[]";
  return f.encoding();
}

Forest forest_from_string(const std::string& text, Algebra algebra) {
  Forest f = parse_forest(text);
  return algebra == Algebra::H ? f.without_single_vertices() : f;
}

std::string term_string(const RootedTree& t, Style) { return t.encoding(); }

std::string term_string(const Forest& f, Style style) { return forest_string(f, style.left); }

std::string term_string(const TensorPair& p, Style style) {
  return forest_string(p.left, style.left) + std::string(kTensorSep) +
         forest_string(p.right, style.right);
}

std::string term_string(const TensorTriple& p, Style style) {
  return forest_string(p.first, style.left) + std::string(kTensorSep) +
         forest_string(p.second, style.right) + std::string(kTensorSep) +
         forest_string(p.third, style.right);
}

TreeComb tree_comb_from_json(const nlohmann::json& j) {
  return comb_from_json<RootedTree>(j, [](const std::string& s) { return parse_tree(s); });
}

ForestComb forest_comb_from_json(const nlohmann::json& j, Algebra algebra) {
  return comb_from_json<Forest>(
      j, [algebra](const std::string& s) { return forest_from_string(s, algebra); });
}

TensorComb tensor_comb_from_json(const nlohmann::json& j, Style style) {
  return comb_from_json<TensorPair>(j, [style](const std::string& s) {
    const auto at = s.find(kTensorSep);
    if (at == std::string::npos) throw ParseError("tensor term lacks \" (x) \"", 0);
    return TensorPair{forest_from_string(s.substr(0, at), style.left),
                      forest_from_string(s.substr(at + kTensorSep.size()), style.right)};
  });
}

}  // namespace arbor
