#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace arbor {

struct Counterexample {
  std::vector<std::string> inputs;
  nlohmann::json lhs;
  nlohmann::json rhs;
};

/// Outcome of one bounded identity sweep.
struct SweepReport {
  enum class Status { Pass, Fail, Inconclusive };

  std::string identity;
  nlohmann::json bound;
  std::size_t cases = 0;
  std::vector<Counterexample> failures;
  std::int64_t millis = 0;

  /// Inconclusive when nothing was checked, otherwise pass iff no failures.
  Status status() const noexcept {
    if (cases == 0) return Status::Inconclusive;
    return failures.empty() ? Status::Pass : Status::Fail;
  }
};

nlohmann::json to_json(const SweepReport& report);
/// One line: "PASS <identity> cases=... failures=... bound=... (... ms)".
std::string summary_line(const SweepReport& report);

enum class PreLieProduct { Graft, GraftSigma, Insert, InsertSigma };

const char* name(PreLieProduct product);

/// Associator symmetry (x*y)*z - x*(y*z) = (y*x)*z - y*(x*z) on all ordered
/// triples. `bound` caps the total vertex count for the grafting products and
/// the total edge count for the insertion products, whose arguments all carry
/// at least one edge.
SweepReport check_prelie(PreLieProduct product, std::size_t bound);

struct DerivationBounds {
  std::size_t max_t_edges = 3;
  std::size_t max_uv_vertices = 4;
};

/// t |> (u -> v) = (t |> u) -> v + u -> (t |> v) for t with >= 1 edge.
/// With `sigma` the same identity for |>_sigma and ->_sigma, where the left
/// side uses the constructive products and the right side the counting ones.
SweepReport check_derivation(const DerivationBounds& bounds = {}, bool sigma = false);

/// (id (x) Delta_CK) Phi = m13 (Phi (x) Phi) Delta_CK on every forest with at
/// most `max_vertices` vertices.
SweepReport check_coaction(std::size_t max_vertices = 5);

struct ModuleBounds {
  std::size_t max_alpha_edges = 3;  // Z_f over trees and two-tree forests
  std::size_t max_ab_vertices = 3;  // delta_u, delta_v over trees
};

/// sum over Sweedler splits (alpha1 * a) x (alpha2 * b) = alpha * (a x b).
SweepReport check_module_hopf(const ModuleBounds& bounds = {});

/// Same compatibility specialised to alpha = Z_t:
/// Z_t * (a x b) = (Z_t * a) x b + a x (Z_t * b).
SweepReport check_module_infinitesimal(const ModuleBounds& bounds = {});

struct LemmaBounds {
  std::size_t max_edges = 3;     // H-side trees
  std::size_t max_vertices = 4;  // CK-side trees and forests
};

/// Dual-layer lemmas, one report each: neutrality of Z_• and e, symmetry of
/// the non-primitive part of Z_t * Z_u, the primitive part being Z_{t|>u},
/// projection through the action, Z_t * delta_u = delta_{t|>u}, the two
/// bracket formulas and the two sigma-rescaling intertwinings.
std::vector<SweepReport> check_lemmas(const LemmaBounds& bounds = {});

/// Coassociativity, counit and grading of both coproducts and of Phi,
/// associativity of both convolutions, integrality of the sigma
/// multiplicities, and enumeration counts.
std::vector<SweepReport> check_structure();

/// Agreement of independently computed routes: ->_sigma by grafting vs by
/// counting, |>_sigma by insertion vs by counting, N against Delta_CK and the
/// insertion count against Delta.
std::vector<SweepReport> check_oracles();

}  // namespace arbor
