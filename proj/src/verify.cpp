#include "arbor/verify.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <sstream>
#include <utility>

#include "arbor/cem.hpp"
#include "arbor/ck.hpp"
#include "arbor/dual.hpp"
#include "arbor/errors.hpp"
#include "arbor/serialize.hpp"

namespace arbor {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok;
  json lhs;
  json rhs;
};

json as_json(const TreeComb& x) { return to_json(x); }
json as_json(const TensorComb& x) { return to_json(x); }
json as_json(const TripleComb& x) { return to_json(x, Style{Algebra::H, Algebra::CK}); }
json as_json(const DualElement& x) { return to_json(x); }
json as_json(const Rational& x) { return x.str(); }
json as_json(std::size_t x) { return x; }

template <class T>
Outcome same(const T& lhs, const T& rhs) {
  if (lhs == rhs) return {true, nullptr, nullptr};
  return {false, as_json(lhs), as_json(rhs)};
}

class Sweep {
 public:
  Sweep(std::string identity, json bound) : start_(Clock::now()) {
    report_.identity = std::move(identity);
    report_.bound = std::move(bound);
  }

  template <class Body>
  void run(std::vector<std::string> inputs, Body&& body) {
    ++report_.cases;
    try {
      Outcome o = body();
      if (!o.ok) report_.failures.push_back({std::move(inputs), std::move(o.lhs), std::move(o.rhs)});
    } catch (const std::exception& e) {
      report_.failures.push_back({std::move(inputs), json{{"error", e.what()}}, nullptr});
    }
  }

  SweepReport finish() {
    report_.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SweepReport report_;
  Clock::time_point start_;
};

std::vector<RootedTree> trees_between(std::size_t min_vertices, std::size_t max_vertices) {
  std::vector<RootedTree> out;
  for (std::size_t n = std::max<std::size_t>(min_vertices, 1); n <= max_vertices; ++n) {
    const auto& level = enumerate_trees(n, kProductMaxVertices);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Forest> forests_upto(std::size_t max_degree, Grading grading) {
  std::vector<Forest> out;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    const auto& level = enumerate_forests(d, grading, kProductMaxVertices);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

TreeComb one(const RootedTree& t) { return TreeComb(t); }

using Product = std::function<TreeComb(const TreeComb&, const TreeComb&)>;

Product product_of(PreLieProduct p) {
  switch (p) {
    case PreLieProduct::Graft:
      return [](const TreeComb& a, const TreeComb& b) { return graft(a, b); };
    case PreLieProduct::GraftSigma:
      return [](const TreeComb& a, const TreeComb& b) { return graft_sigma(a, b); };
    case PreLieProduct::Insert:
      return [](const TreeComb& a, const TreeComb& b) { return insert(a, b); };
    case PreLieProduct::InsertSigma:
      return [](const TreeComb& a, const TreeComb& b) { return insert_sigma(a, b); };
  }
  throw InvariantError("unknown product");
}

// Second route, where one exists, so the two sides of an identity do not
// share a product implementation.
Product alternate_of(PreLieProduct p) {
  switch (p) {
    case PreLieProduct::GraftSigma:
      return [](const TreeComb& a, const TreeComb& b) { return graft_sigma_by_grafting(a, b); };
    case PreLieProduct::InsertSigma:
      return [](const TreeComb& a, const TreeComb& b) { return insert_sigma_by_insertion(a, b); };
    default:
      return product_of(p);
  }
}

TripleComb apply_right(const TensorComb& x, const std::function<TensorComb(const Forest&)>& d) {
  TripleComb out;
  for (const auto& [p, c] : x)
    for (const auto& [q, cq] : d(p.right)) out.add(TensorTriple{p.left, q.left, q.right}, c * cq);
  return out;
}

TripleComb apply_left(const TensorComb& x, const std::function<TensorComb(const Forest&)>& d) {
  TripleComb out;
  for (const auto& [p, c] : x)
    for (const auto& [q, cq] : d(p.left)) out.add(TensorTriple{q.left, q.right, p.right}, c * cq);
  return out;
}

template <class Coproduct>
Outcome check_counit(const Forest& f, Coproduct coproduct) {
  ForestComb left_unit;
  ForestComb right_unit;
  for (const auto& [p, c] : coproduct(f)) {
    if (p.left.empty()) left_unit.add(p.right, c);
    if (p.right.empty()) right_unit.add(p.left, c);
  }
  const ForestComb expect(f);
  if (left_unit == expect && right_unit == expect) return {true, nullptr, nullptr};
  return {false, to_json(left_unit), to_json(right_unit)};
}

// Rooted-tree counts from the classical recurrence
// a(n+1) = (1/n) sum_{k=1..n} (sum_{d|k} d a(d)) a(n-k+1).
std::vector<std::size_t> tree_counts(std::size_t n_max) {
  std::vector<std::size_t> a(n_max + 1, 0);
  a[1] = 1;
  for (std::size_t n = 1; n < n_max; ++n) {
    std::size_t s = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t inner = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) inner += d * a[d];
      s += inner * a[n - k + 1];
    }
    a[n + 1] = s / n;
  }
  return a;
}

}  // namespace

const char* name(PreLieProduct product) {
  switch (product) {
    case PreLieProduct::Graft: return "prelie-graft";
    case PreLieProduct::GraftSigma: return "prelie-graft-sigma";
    case PreLieProduct::Insert: return "prelie-insert";
    case PreLieProduct::InsertSigma: return "prelie-insert-sigma";
  }
  return "prelie";
}

json to_json(const SweepReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"identity", r.identity},
          {"bound", r.bound},
          {"cases", r.cases},
          {"failures", failures},
          {"millis", r.millis}};
}

std::string summary_line(const SweepReport& r) {
  const char* status = r.status() == SweepReport::Status::Pass
                           ? "PASS"
                           : (r.status() == SweepReport::Status::Fail ? "FAIL" : "INCONCLUSIVE");
  std::ostringstream os;
  os << status << ' ' << r.identity << " cases=" << r.cases << " failures=" << r.failures.size()
     << " bound=" << r.bound.dump() << " (" << r.millis << " ms)";
  return os.str();
}

SweepReport check_prelie(PreLieProduct product, std::size_t bound) {
  const bool grafting = product == PreLieProduct::Graft || product == PreLieProduct::GraftSigma;
  Sweep sweep(name(product), grafting ? json{{"max_total_vertices", bound}}
                                      : json{{"max_total_edges", bound}});
  const auto mul = product_of(product);
  const auto alt = alternate_of(product);
  const auto size = [grafting](const RootedTree& t) {
    return grafting ? t.vertex_count() : t.edge_count();
  };
  const auto pool = grafting ? trees_between(1, bound > 2 ? bound - 2 : 0)
                             : trees_between(2, bound > 2 ? bound - 1 : 0);
  for (const auto& x : pool)
    for (const auto& y : pool)
      for (const auto& z : pool) {
        if (size(x) + size(y) + size(z) > bound) continue;
        sweep.run({x.encoding(), y.encoding(), z.encoding()}, [&] {
          const TreeComb lhs = mul(mul(one(x), one(y)), one(z)) - mul(one(x), mul(one(y), one(z)));
          const TreeComb rhs = alt(alt(one(y), one(x)), one(z)) - alt(one(y), alt(one(x), one(z)));
          return same(lhs, rhs);
        });
      }
  return sweep.finish();
}

SweepReport check_derivation(const DerivationBounds& bounds, bool sigma) {
  Sweep sweep(sigma ? "derivation-sigma" : "derivation",
              {{"max_t_edges", bounds.max_t_edges}, {"max_u_v_vertices", bounds.max_uv_vertices}});
  const auto ts = trees_between(2, bounds.max_t_edges + 1);
  const auto uvs = trees_between(1, bounds.max_uv_vertices);
  for (const auto& t : ts)
    for (const auto& u : uvs)
      for (const auto& v : uvs)
        sweep.run({t.encoding(), u.encoding(), v.encoding()}, [&] {
          if (!sigma) {
            const TreeComb lhs = insert(one(t), graft(u, v));
            const TreeComb rhs = graft(insert(t, u), one(v)) + graft(one(u), insert(t, v));
            return same(lhs, rhs);
          }
          const TreeComb lhs = insert_sigma_by_insertion(one(t), graft_sigma_by_grafting(u, v));
          const TreeComb rhs =
              graft_sigma(insert_sigma(t, u), one(v)) + graft_sigma(one(u), insert_sigma(t, v));
          return same(lhs, rhs);
        });
  return sweep.finish();
}

SweepReport check_coaction(std::size_t max_vertices) {
  Sweep sweep("coaction", {{"max_vertices", max_vertices}});
  const auto delta_ck = [](const Forest& f) { return coproduct_ck(f); };
  for (const auto& f : forests_upto(max_vertices, Grading::Vertices))
    sweep.run({forest_string(f, Algebra::CK)}, [&] {
      const TripleComb lhs = apply_right(coaction_phi(f), delta_ck);
      TripleComb rhs;
      for (const auto& [p, c] : coproduct_ck(f))
        for (const auto& [a, ca] : coaction_phi(p.left))
          for (const auto& [b, cb] : coaction_phi(p.right))
            rhs.add(TensorTriple{a.left * b.left, a.right, b.right}, c * ca * cb);
      return same(lhs, rhs);
    });
  return sweep.finish();
}

namespace {

std::vector<Forest> module_alphas(std::size_t max_edges) {
  std::vector<Forest> out{Forest()};
  const auto trees = trees_between(2, max_edges + 1);
  for (const auto& t : trees) out.emplace_back(t);
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i; j < trees.size(); ++j)
      if (trees[i].edge_count() + trees[j].edge_count() <= max_edges)
        out.emplace_back(std::vector<RootedTree>{trees[i], trees[j]});
  return out;
}

}  // namespace

SweepReport check_module_hopf(const ModuleBounds& bounds) {
  Sweep sweep("module-hopf",
              {{"max_alpha_edges", bounds.max_alpha_edges}, {"max_a_b_vertices", bounds.max_ab_vertices}});
  const auto trees = trees_between(1, bounds.max_ab_vertices);
  for (const auto& f : module_alphas(bounds.max_alpha_edges)) {
    const DualElement alpha = DualElement::Z(f);
    const TensorComb split = dual_coproduct_H(alpha);
    for (const auto& u : trees)
      for (const auto& v : trees)
        sweep.run({"Z:" + forest_string(f, Algebra::H), u.encoding(), v.encoding()}, [&] {
          const DualElement a = DualElement::delta(Forest(u));
          const DualElement b = DualElement::delta(Forest(v));
          DualElement lhs(Algebra::CK);
          for (const auto& [p, c] : split)
            lhs += c * convolve_CK(act(DualElement::Z(p.left), a), act(DualElement::Z(p.right), b));
          return same(lhs, act(alpha, convolve_CK(a, b)));
        });
  }
  return sweep.finish();
}

SweepReport check_module_infinitesimal(const ModuleBounds& bounds) {
  Sweep sweep("module-infinitesimal",
              {{"max_alpha_edges", bounds.max_alpha_edges}, {"max_a_b_vertices", bounds.max_ab_vertices}});
  const auto trees = trees_between(1, bounds.max_ab_vertices);
  for (const auto& t : trees_between(2, bounds.max_alpha_edges + 1)) {
    const DualElement z = DualElement::Z(Forest(t));
    for (const auto& u : trees)
      for (const auto& v : trees)
        sweep.run({"Z:" + t.encoding(), u.encoding(), v.encoding()}, [&] {
          const DualElement a = DualElement::delta(Forest(u));
          const DualElement b = DualElement::delta(Forest(v));
          return same(act(z, convolve_CK(a, b)), convolve_CK(act(z, a), b) + convolve_CK(a, act(z, b)));
        });
  }
  return sweep.finish();
}

std::vector<SweepReport> check_lemmas(const LemmaBounds& bounds) {
  std::vector<SweepReport> out;
  const json bound = {{"max_edges", bounds.max_edges}, {"max_vertices", bounds.max_vertices}};
  const auto h_trees = trees_between(2, bounds.max_edges + 1);
  const auto ck_trees = trees_between(1, bounds.max_vertices);
  const DualElement z_unit = DualElement::Z_unit();
  const DualElement e = DualElement::counit();

  {
    Sweep sweep("neutral-unit", bound);
    for (const auto& f : forests_upto(bounds.max_edges, Grading::Edges)) {
      const DualElement alpha = DualElement::Z(f);
      sweep.run({"Z:" + forest_string(f, Algebra::H)}, [&] { return same(convolve_H(z_unit, alpha), alpha); });
      sweep.run({"Z:" + forest_string(f, Algebra::H)}, [&] { return same(convolve_H(alpha, z_unit), alpha); });
    }
    for (const auto& f : forests_upto(bounds.max_vertices, Grading::Vertices)) {
      const DualElement a = DualElement::delta(f);
      const std::string key = "d:" + forest_string(f, Algebra::CK);
      sweep.run({key}, [&] { return same(act(z_unit, a), a); });
      sweep.run({key}, [&] { return same(convolve_CK(e, a), a); });
      sweep.run({key}, [&] { return same(convolve_CK(a, e), a); });
    }
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("nonprimitive-symmetry", bound);
    for (const auto& t : h_trees)
      for (const auto& u : h_trees) {
        if (t.edge_count() + u.edge_count() > bounds.max_edges + 1) continue;
        sweep.run({t.encoding(), u.encoding()}, [&] {
          return same(complement(convolve_H(DualElement::Z(Forest(t)), DualElement::Z(Forest(u)))),
                      complement(convolve_H(DualElement::Z(Forest(u)), DualElement::Z(Forest(t)))));
        });
      }
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("primitive-part-is-insertion", bound);
    for (const auto& t : h_trees)
      for (const auto& u : h_trees) {
        if (t.edge_count() + u.edge_count() > bounds.max_edges + 1) continue;
        sweep.run({t.encoding(), u.encoding()}, [&] {
          return same(project_primitive(convolve_H(DualElement::Z(Forest(t)), DualElement::Z(Forest(u)))),
                      DualElement::Z(insert(t, u)));
        });
      }
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("projection-through-action", bound);
    const auto tees = trees_between(1, bounds.max_edges + 1);
    for (const auto& t : tees)
      for (const auto& f : forests_upto(bounds.max_vertices, Grading::Vertices))
        sweep.run({t.encoding(), "d:" + forest_string(f, Algebra::CK)}, [&] {
          const DualElement z = DualElement::Z(Forest(t));
          const DualElement d = DualElement::delta(f);
          return same(project_primitive(act(z, d)), project_primitive(act(z, project_primitive(d))));
        });
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("action-is-insertion", bound);
    for (const auto& t : h_trees)
      for (const auto& u : ck_trees)
        sweep.run({t.encoding(), u.encoding()}, [&] {
          return same(act(DualElement::Z(Forest(t)), DualElement::delta(Forest(u))),
                      DualElement::delta(insert(t, u)));
        });
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("bracket-graft", bound);
    for (const auto& t : ck_trees)
      for (const auto& u : ck_trees)
        sweep.run({t.encoding(), u.encoding()}, [&] {
          const DualElement a = DualElement::delta(Forest(t));
          const DualElement b = DualElement::delta(Forest(u));
          return same(convolve_CK(a, b) - convolve_CK(b, a), DualElement::delta(lie_bracket_graft(t, u)));
        });
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("bracket-insert", bound);
    for (const auto& t : h_trees)
      for (const auto& u : h_trees) {
        if (t.edge_count() + u.edge_count() > bounds.max_edges + 1) continue;
        sweep.run({t.encoding(), u.encoding()}, [&] {
          const DualElement a = DualElement::Z(Forest(t));
          const DualElement b = DualElement::Z(Forest(u));
          return same(convolve_H(a, b) - convolve_H(b, a), DualElement::Z(insert(t, u) - insert(u, t)));
        });
      }
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("phi-intertwines-graft", bound);
    const auto pool = trees_between(1, bounds.max_vertices + 2);
    for (const auto& t : pool)
      for (const auto& u : pool) {
        if (t.vertex_count() + u.vertex_count() > bounds.max_vertices + 3) continue;
        sweep.run({t.encoding(), u.encoding()}, [&] {
          return same(phi_scale(graft_sigma(t, u)), graft(phi_scale(one(t)), phi_scale(one(u))));
        });
      }
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("phi-intertwines-insert", bound);
    for (const auto& t : h_trees)
      for (const auto& u : h_trees) {
        if (t.edge_count() + u.edge_count() > bounds.max_edges + 1) continue;
        sweep.run({t.encoding(), u.encoding()}, [&] {
          return same(phi_scale(insert_sigma(t, u)), insert(phi_scale(one(t)), phi_scale(one(u))));
        });
      }
    out.push_back(sweep.finish());
  }
  return out;
}

std::vector<SweepReport> check_structure() {
  std::vector<SweepReport> out;
  const auto d_ck = [](const Forest& f) { return coproduct_ck(f); };
  const auto d_cem = [](const Forest& f) { return coproduct_cem(f); };

  {
    Sweep sweep("coassociativity-ck", {{"max_vertices", 6}});
    for (const auto& f : forests_upto(6, Grading::Vertices))
      sweep.run({forest_string(f, Algebra::CK)}, [&] {
        const TensorComb d = coproduct_ck(f);
        return same(apply_left(d, d_ck), apply_right(d, d_ck));
      });
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("coassociativity-cem", {{"max_edges", 4}});
    for (const auto& f : forests_upto(4, Grading::Edges))
      sweep.run({forest_string(f, Algebra::H)}, [&] {
        const TensorComb d = coproduct_cem(f);
        return same(apply_left(d, d_cem), apply_right(d, d_cem));
      });
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("counit", {{"max_vertices", 6}, {"max_edges", 4}});
    for (const auto& f : forests_upto(6, Grading::Vertices))
      sweep.run({forest_string(f, Algebra::CK)}, [&] { return check_counit(f, d_ck); });
    for (const auto& f : forests_upto(4, Grading::Edges))
      sweep.run({forest_string(f, Algebra::H)}, [&] { return check_counit(f, d_cem); });
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("grading", {{"max_vertices", 6}, {"max_edges", 5}});
    for (const auto& f : forests_upto(6, Grading::Vertices)) {
      sweep.run({"ck", forest_string(f, Algebra::CK)}, [&] {
        for (const auto& [p, c] : coproduct_ck(f))
          if (p.left.vertex_count() + p.right.vertex_count() != f.vertex_count())
            return Outcome{false, term_string(p), f.vertex_count()};
        return Outcome{true, nullptr, nullptr};
      });
      sweep.run({"phi", forest_string(f, Algebra::CK)}, [&] {
        for (const auto& [p, c] : coaction_phi(f))
          if (p.left.edge_count() + p.right.vertex_count() != f.vertex_count())
            return Outcome{false, term_string(p, {Algebra::H, Algebra::CK}), f.vertex_count()};
        return Outcome{true, nullptr, nullptr};
      });
    }
    for (const auto& f : forests_upto(5, Grading::Edges))
      sweep.run({"cem", forest_string(f, Algebra::H)}, [&] {
        for (const auto& [p, c] : coproduct_cem(f))
          if (p.left.edge_count() + p.right.edge_count() != f.edge_count())
            return Outcome{false, term_string(p, {Algebra::H, Algebra::H}), f.edge_count()};
        return Outcome{true, nullptr, nullptr};
      });
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("integrality-graft", {{"max_total_vertices", 8}});
    const auto pool = trees_between(1, 7);
    for (const auto& t : pool)
      for (const auto& u : pool) {
        if (t.vertex_count() + u.vertex_count() > 8) continue;
        sweep.run({t.encoding(), u.encoding()}, [&] {
          Rational total;
          for (const auto& [x, m] : graft_sigma(t, u)) {
            if (m < Rational(0)) return Outcome{false, as_json(m), x.encoding()};
            total += m;
          }
          return same(total, Rational(u.vertex_count()));
        });
      }
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("integrality-insert", {{"max_total_edges", 5}});
    for (const auto& t : trees_between(2, 6))
      for (const auto& u : trees_between(1, 6)) {
        if (t.edge_count() + u.edge_count() > 5) continue;
        sweep.run({t.encoding(), u.encoding()}, [&] {
          for (const auto& [w, m] : insert_sigma(t, u))
            if (m < Rational(0)) return Outcome{false, as_json(m), w.encoding()};
          return Outcome{true, nullptr, nullptr};
        });
      }
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("convolution-associativity", {{"max_edges", 4}, {"max_vertices", 5}});
    const auto hs = forests_upto(4, Grading::Edges);
    for (const auto& a : hs)
      for (const auto& b : hs)
        for (const auto& c : hs) {
          if (a.edge_count() + b.edge_count() + c.edge_count() > 4) continue;
          sweep.run({"Z:" + forest_string(a, Algebra::H), "Z:" + forest_string(b, Algebra::H),
                     "Z:" + forest_string(c, Algebra::H)},
                    [&] {
                      const auto za = DualElement::Z(a), zb = DualElement::Z(b), zc = DualElement::Z(c);
                      return same(convolve_H(convolve_H(za, zb), zc), convolve_H(za, convolve_H(zb, zc)));
                    });
        }
    const auto cks = forests_upto(5, Grading::Vertices);
    for (const auto& a : cks)
      for (const auto& b : cks)
        for (const auto& c : cks) {
          if (a.vertex_count() + b.vertex_count() + c.vertex_count() > 5) continue;
          sweep.run({"d:" + forest_string(a, Algebra::CK), "d:" + forest_string(b, Algebra::CK),
                     "d:" + forest_string(c, Algebra::CK)},
                    [&] {
                      const auto da = DualElement::delta(a), db = DualElement::delta(b),
                                 dc = DualElement::delta(c);
                      return same(convolve_CK(convolve_CK(da, db), dc),
                                  convolve_CK(da, convolve_CK(db, dc)));
                    });
        }
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("enumeration-counts", {{"max_vertices", kDefaultMaxVertices}});
    const auto expected = tree_counts(kDefaultMaxVertices);
    for (std::size_t n = 1; n <= kDefaultMaxVertices; ++n)
      sweep.run({std::to_string(n)}, [&] { return same(enumerate_trees(n).size(), expected[n]); });
    out.push_back(sweep.finish());
  }
  return out;
}

std::vector<SweepReport> check_oracles() {
  std::vector<SweepReport> out;
  {
    Sweep sweep("graft-sigma-two-routes", {{"max_total_vertices", 8}});
    const auto pool = trees_between(1, 7);
    for (const auto& t : pool)
      for (const auto& u : pool) {
        if (t.vertex_count() + u.vertex_count() > 8) continue;
        sweep.run({t.encoding(), u.encoding()},
                  [&] { return same(graft_sigma(t, u), graft_sigma_by_grafting(t, u)); });
      }
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("insert-sigma-two-routes", {{"max_total_edges", 5}});
    for (const auto& t : trees_between(2, 6))
      for (const auto& u : trees_between(1, 6)) {
        if (t.edge_count() + u.edge_count() > 5) continue;
        sweep.run({t.encoding(), u.encoding()},
                  [&] { return same(insert_sigma(t, u), insert_sigma_by_insertion(t, u)); });
      }
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("graft-count-vs-ck-coproduct", {{"max_vertices", 7}});
    for (const auto& x : trees_between(2, 7))
      sweep.run({x.encoding()}, [&] {
        // Single-tree prunings of a tree come exactly from elementary cuts.
        TensorComb from_coproduct;
        for (const auto& [p, c] : coproduct_ck(Forest(x)))
          if (p.left.is_single_tree() && p.right.is_single_tree()) from_coproduct.add(p, c);
        TensorComb from_count;
        for (const auto& t : trees_between(1, x.vertex_count() - 1))
          for (const auto& r : enumerate_trees(x.vertex_count() - t.vertex_count(), kProductMaxVertices))
            from_count.add(TensorPair{Forest(t), Forest(r)}, graft_count(t, r, x));
        return same(from_coproduct, from_count);
      });
    out.push_back(sweep.finish());
  }
  {
    Sweep sweep("insert-count-vs-cem-coproduct", {{"max_vertices", 7}});
    for (const auto& w : trees_between(2, 7))
      sweep.run({w.encoding()}, [&] {
        TensorComb from_coproduct;
        // The right factor of Delta is in normal form; restore the single
        // vertex so it can be compared with contraction counts.
        for (const auto& [p, c] : coproduct_cem(Forest(w)))
          if (p.left.is_single_tree())
            from_coproduct.add(TensorPair{p.left, p.right.empty() ? Forest(RootedTree()) : p.right}, c);
        TensorComb from_count;
        for (const auto& t : trees_between(2, w.vertex_count()))
          for (const auto& u : enumerate_trees(w.vertex_count() - t.edge_count(), kProductMaxVertices))
            from_count.add(TensorPair{Forest(t), Forest(u)}, insert_count(t, u, w));
        return same(from_coproduct, from_count);
      });
    out.push_back(sweep.finish());
  }
  return out;
}

}  // namespace arbor
