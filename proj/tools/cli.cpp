#include "arbor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "arbor/cem.hpp"
#include "arbor/ck.hpp"
#include "arbor/errors.hpp"
#include "arbor/serialize.hpp"
#include "arbor/verify.hpp"

namespace arbor::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string format = "text";
  std::string out_path;
  std::optional<std::size_t> bound;
  std::size_t max_t_edges = DerivationBounds{}.max_t_edges;
  std::size_t max_u_v = DerivationBounds{}.max_uv_vertices;

  std::string op;
  std::string left;
  std::string right;
  std::string algebra;
  std::string forest;
  std::string suite = "all";
  std::size_t n = 0;
  std::string tree;

  bool json() const { return format == "json"; }
};

const std::map<std::string, std::function<TreeComb(const RootedTree&, const RootedTree&)>>&
products() {
  static const std::map<std::string, std::function<TreeComb(const RootedTree&, const RootedTree&)>> table{
      {"graft", [](const RootedTree& a, const RootedTree& b) { return graft(a, b); }},
      {"graft-sigma", [](const RootedTree& a, const RootedTree& b) { return graft_sigma(a, b); }},
      {"insert", [](const RootedTree& a, const RootedTree& b) { return insert(a, b); }},
      {"insert-sigma", [](const RootedTree& a, const RootedTree& b) { return insert_sigma(a, b); }},
  };
  return table;
}

const std::vector<std::string>& suites() {
  static const std::vector<std::string> names{
      "prelie-graft", "prelie-graft-sigma", "prelie-insert", "prelie-insert-sigma",
      "derivation",   "derivation-sigma",   "coaction",      "module-hopf",
      "module-infinitesimal", "lemmas",     "structure",     "oracles",
      "all"};
  return names;
}

std::vector<SweepReport> run_suite(const std::string& suite, const Config& cfg) {
  const DerivationBounds derivation{cfg.max_t_edges, cfg.max_u_v};
  const auto bound_or = [&](std::size_t fallback) { return cfg.bound.value_or(fallback); };
  const auto module_bounds = [&] {
    ModuleBounds b;
    if (cfg.bound) b.max_alpha_edges = b.max_ab_vertices = *cfg.bound;
    return b;
  };
  const auto lemma_bounds = [&] {
    LemmaBounds b;
    if (cfg.bound) {
      b.max_vertices = *cfg.bound;
      b.max_edges = *cfg.bound > 0 ? *cfg.bound - 1 : 0;
    }
    return b;
  };

  if (suite == "prelie-graft") return {check_prelie(PreLieProduct::Graft, bound_or(8))};
  if (suite == "prelie-graft-sigma") return {check_prelie(PreLieProduct::GraftSigma, bound_or(8))};
  if (suite == "prelie-insert") return {check_prelie(PreLieProduct::Insert, bound_or(5))};
  if (suite == "prelie-insert-sigma") return {check_prelie(PreLieProduct::InsertSigma, bound_or(5))};
  if (suite == "derivation") return {check_derivation(derivation, false)};
  if (suite == "derivation-sigma") return {check_derivation(derivation, true)};
  if (suite == "coaction") return {check_coaction(bound_or(5))};
  if (suite == "module-hopf") return {check_module_hopf(module_bounds())};
  if (suite == "module-infinitesimal") return {check_module_infinitesimal(module_bounds())};
  if (suite == "lemmas") return check_lemmas(lemma_bounds());
  if (suite == "structure") return check_structure();
  if (suite == "oracles") return check_oracles();

  std::vector<SweepReport> all;
  Config defaults;
  defaults.max_t_edges = cfg.max_t_edges;
  defaults.max_u_v = cfg.max_u_v;
  for (const auto& name : suites()) {
    if (name == "all") continue;
    auto part = run_suite(name, defaults);
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  return all;
}

int cmd_product(const Config& cfg, std::ostream& out) {
  const RootedTree a = parse_tree(cfg.left);
  const RootedTree b = parse_tree(cfg.right);
  const TreeComb result = products().at(cfg.op)(a, b);
  if (cfg.json()) {
    out << to_json(result).dump() << '\n';
  } else {
    out << to_text(result) << '\n';
  }
  return kOk;
}

int cmd_coproduct(const Config& cfg, std::ostream& out) {
  const Forest f = parse_forest(cfg.forest);
  TensorComb result;
  Style style;
  if (cfg.algebra == "ck") {
    result = coproduct_ck(f);
  } else {
    result = coproduct_cem(f);
    style = {Algebra::H, Algebra::H};
  }
  if (cfg.json()) {
    out << to_json(result, style).dump() << '\n';
  } else {
    out << to_text(result, style) << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto reports = run_suite(cfg.suite, cfg);
  bool failed = false;
  bool inconclusive = false;
  for (const auto& r : reports) {
    failed |= r.status() == SweepReport::Status::Fail;
    inconclusive |= r.status() == SweepReport::Status::Inconclusive;
  }
  if (cfg.json()) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << summary_line(r) << '\n';
      for (const auto& f : r.failures)
        out << "  counterexample " << json(f.inputs).dump() << "\n    lhs " << f.lhs.dump()
            << "\n    rhs " << f.rhs.dump() << '\n';
    }
  }
  if (failed) return kIdentityFailure;
  return inconclusive ? kInconclusive : kOk;
}

int cmd_enumerate(const Config& cfg, std::ostream& out) {
  const auto& trees = enumerate_trees(cfg.n, cfg.bound.value_or(kDefaultMaxVertices));
  if (cfg.json()) {
    json arr = json::array();
    for (const auto& t : trees) arr.push_back(t.encoding());
    out << arr.dump() << '\n';
  } else {
    for (const auto& t : trees) out << t.encoding() << '\n';
  }
  return kOk;
}

int cmd_sigma(const Config& cfg, std::ostream& out) {
  const RootedTree t = parse_tree(cfg.tree);
  const auto sigma = symmetry_factor(t);
  if (cfg.json()) {
    out << json{{"tree", t.encoding()}, {"sigma", sigma}}.dump() << '\n';
  } else {
    out << sigma << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Rooted-tree Hopf algebras: products, coproducts and identity sweeps", "arbor"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");

  auto* product = app.add_subcommand("product", "Pre-Lie product of two trees");
  product->add_option("op", cfg.op, "graft | graft-sigma | insert | insert-sigma")
      ->required()
      ->check(CLI::IsMember({"graft", "graft-sigma", "insert", "insert-sigma"}));
  product->add_option("left", cfg.left, "Left operand, bracket notation")->required();
  product->add_option("right", cfg.right, "Right operand, bracket notation")->required();

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of a forest");
  coproduct->add_option("algebra", cfg.algebra, "ck | cem")->required()->check(CLI::IsMember({"ck", "cem"}));
  coproduct->add_option("forest", cfg.forest, "Whitespace-separated trees (\"1\" for the unit)")->required();

  auto* verify = app.add_subcommand("verify", "Run identity sweeps");
  verify->add_option("suite", cfg.suite, "Suite name or 'all'")->check(CLI::IsMember(suites()));
  verify->add_option("--bound", cfg.bound, "Size bound for the chosen suite")->check(CLI::PositiveNumber);
  verify->add_option("--max-t-edges", cfg.max_t_edges, "Derivation sweep: edges of t")->check(CLI::PositiveNumber);
  verify->add_option("--max-u-v", cfg.max_u_v, "Derivation sweep: vertices of u and v")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List all trees with n vertices");
  enumerate->add_option("n", cfg.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--bound", cfg.bound, "Largest n allowed")->check(CLI::PositiveNumber);

  auto* sigma = app.add_subcommand("sigma", "Symmetry factor of a tree");
  sigma->add_option("tree", cfg.tree, "Tree, bracket notation")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (product->parsed()) code = cmd_product(cfg, buffer);
    if (coproduct->parsed()) code = cmd_coproduct(cfg, buffer);
    if (verify->parsed()) code = cmd_verify(cfg, buffer);
    if (enumerate->parsed()) code = cmd_enumerate(cfg, buffer);
    if (sigma->parsed()) code = cmd_sigma(cfg, buffer);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kDomainError;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << '\n';
      return kDomainError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace arbor::cli
