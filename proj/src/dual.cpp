#include "arbor/dual.hpp"

#include <map>
#include <mutex>
#include <set>

#include "arbor/cem.hpp"
#include "arbor/ck.hpp"
#include "arbor/errors.hpp"

namespace arbor {

namespace {

template <class Compute>
const TensorComb& memo(std::map<Forest, TensorComb>& cache, std::mutex& mutex, const Forest& f,
                       Compute compute) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(f); it != cache.end()) return it->second;
  }
  TensorComb value = compute(f);
  std::lock_guard lock(mutex);
  return cache.emplace(f, std::move(value)).first->second;
}

const TensorComb& forest_coproduct_cem(const Forest& f) {
  static std::mutex mutex;
  static std::map<Forest, TensorComb> cache;
  return memo(cache, mutex, f, [](const Forest& x) { return coproduct_cem(x); });
}

const TensorComb& forest_coproduct_ck(const Forest& f) {
  static std::mutex mutex;
  static std::map<Forest, TensorComb> cache;
  return memo(cache, mutex, f, [](const Forest& x) { return coproduct_ck(x); });
}

const TensorComb& forest_coaction(const Forest& f) {
  static std::mutex mutex;
  static std::map<Forest, TensorComb> cache;
  return memo(cache, mutex, f, [](const Forest& x) { return coaction_phi(x); });
}

void require_side(const DualElement& x, Algebra side, const char* what) {
  if (x.side() != side)
    throw DomainError(std::string(what) + ": expected a " + (side == Algebra::H ? "Z" : "delta") +
                      "-side dual element");
}

// Pairs left (x) right against the coproduct of every basis forest of each
// reachable output degree.
template <class Coproduct, class OutDegree>
DualElement convolve(const DualElement& left, const DualElement& right, Algebra out_side,
                     Grading grading, OutDegree out_degree, Coproduct coproduct) {
  DualElement out(out_side);
  if (left.empty() || right.empty()) return out;
  std::set<std::size_t> targets;
  for (const auto& [g, cg] : left.terms())
    for (const auto& [h, ch] : right.terms()) targets.insert(out_degree(g, h));
  ForestComb acc;
  for (std::size_t d : targets) {
    for (const auto& f : enumerate_forests(d, grading, kProductMaxVertices)) {
      Rational value;
      for (const auto& [p, c] : coproduct(f)) {
        const Rational a = left.terms().coeff(p.left);
        if (a.is_zero()) continue;
        const Rational b = right.terms().coeff(p.right);
        if (!b.is_zero()) value += c * a * b;
      }
      acc.add(f, value);
    }
  }
  return DualElement(out_side, std::move(acc));
}

}  // namespace

DualElement::DualElement(Algebra side, ForestComb terms) : side_(side) {
  if (side == Algebra::H) {
    for (const auto& [f, c] : terms) terms_.add(f.without_single_vertices(), c);
  } else {
    terms_ = std::move(terms);
  }
}

DualElement DualElement::Z(const Forest& f) { return DualElement(Algebra::H, ForestComb(f)); }

DualElement DualElement::Z(const TreeComb& trees) {
  return DualElement(Algebra::H, as_forests(trees));
}

DualElement DualElement::delta(const Forest& f) { return DualElement(Algebra::CK, ForestComb(f)); }

DualElement DualElement::delta(const TreeComb& trees) {
  return DualElement(Algebra::CK, as_forests(trees));
}

DualElement& DualElement::operator+=(const DualElement& o) {
  if (o.side_ != side_) throw DomainError("adding dual elements from different sides");
  terms_ += o.terms_;
  return *this;
}

DualElement& DualElement::operator-=(const DualElement& o) {
  if (o.side_ != side_) throw DomainError("subtracting dual elements from different sides");
  terms_ -= o.terms_;
  return *this;
}

Rational pair(const DualElement& a, const Forest& f, Algebra algebra) {
  if (a.side() != algebra) throw DomainError("pairing a dual element with the wrong algebra");
  return a.terms().coeff(algebra == Algebra::H ? f.without_single_vertices() : f);
}

DualElement convolve_H(const DualElement& alpha, const DualElement& beta) {
  require_side(alpha, Algebra::H, "convolve_H");
  require_side(beta, Algebra::H, "convolve_H");
  return convolve(
      alpha, beta, Algebra::H, Grading::Edges,
      [](const Forest& g, const Forest& h) { return g.edge_count() + h.edge_count(); },
      forest_coproduct_cem);
}

DualElement convolve_CK(const DualElement& a, const DualElement& b) {
  require_side(a, Algebra::CK, "convolve_CK");
  require_side(b, Algebra::CK, "convolve_CK");
  return convolve(
      a, b, Algebra::CK, Grading::Vertices,
      [](const Forest& g, const Forest& h) { return g.vertex_count() + h.vertex_count(); },
      forest_coproduct_ck);
}

DualElement act(const DualElement& alpha, const DualElement& a) {
  require_side(alpha, Algebra::H, "act");
  require_side(a, Algebra::CK, "act");
  // A term s (x) t/s of Phi(f) has edges(s) + vertices(t/s) = vertices(f).
  return convolve(
      alpha, a, Algebra::CK, Grading::Vertices,
      [](const Forest& g, const Forest& h) { return g.edge_count() + h.vertex_count(); },
      forest_coaction);
}

TensorComb dual_coproduct_H(const DualElement& alpha) {
  require_side(alpha, Algebra::H, "dual_coproduct_H");
  TensorComb out;
  for (const auto& [f, c] : alpha.terms()) {
    // Distinct trees of f with multiplicities; each split picks how many
    // copies of every tree go left.
    std::vector<std::pair<RootedTree, std::size_t>> groups;
    for (const auto& t : f.trees()) {
      if (!groups.empty() && groups.back().first == t) {
        ++groups.back().second;
      } else {
        groups.emplace_back(t, 1);
      }
    }
    std::vector<std::size_t> take(groups.size(), 0);
    for (;;) {
      std::vector<RootedTree> left;
      std::vector<RootedTree> right;
      for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t k = 0; k < groups[i].second; ++k)
          (k < take[i] ? left : right).push_back(groups[i].first);
      out.add(TensorPair{Forest(std::move(left)), Forest(std::move(right))}, c);

      std::size_t i = 0;
      while (i < take.size() && take[i] == groups[i].second) take[i++] = 0;
      if (i == take.size()) break;
      ++take[i];
    }
  }
  return out;
}

DualElement project_primitive(const DualElement& x) {
  ForestComb kept;
  for (const auto& [f, c] : x.terms())
    if (f.is_single_tree()) kept.add(f, c);
  return DualElement(x.side(), std::move(kept));
}

DualElement complement(const DualElement& x) { return x - project_primitive(x); }

std::string to_text(const DualElement& x) {
  const std::string prefix = x.side() == Algebra::H ? "Z:" : "d:";
  return format_text(x.terms(),
                     [&](const Forest& f) { return prefix + forest_string(f, x.side()); });
}

nlohmann::json to_json(const DualElement& x) {
  const std::string prefix = x.side() == Algebra::H ? "Z:" : "d:";
  return format_json(x.terms(),
                     [&](const Forest& f) { return prefix + forest_string(f, x.side()); });
}

}  // namespace arbor
