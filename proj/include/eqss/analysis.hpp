#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqss/builders.hpp"
#include "eqss/checks.hpp"
#include "eqss/complex.hpp"
#include "eqss/duality.hpp"
#include "eqss/theorems.hpp"

namespace eqss {

inline constexpr const char* kToolName = "eqss";
inline constexpr const char* kToolVersion = "1.0.0";

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

struct AnalysisOptions {
  /// Swan column window; default 2n + 16.
  std::optional<int> kmax;
  /// Last page reported and checked; default max(5, n + 2).
  std::optional<int> rmax;
  /// Random product evaluations per page.
  std::size_t product_samples = 200;
  std::uint64_t seed = 1;
  bool no_p_torsion = true;
};

/// Shape of the fixed set of a regular complex.
struct FixedSetShape {
  std::vector<std::size_t> betti;
  std::size_t points = 0;   // isolated fixed points when the set is finite
  std::size_t circles = 0;  // components when the set is a disjoint union of circles
  bool finite = false;
  bool circles_only = false;
  bool empty() const noexcept { return betti.empty(); }
};

/// Everything computed for one simplicial G-complex; `report` is the
/// deterministic JSON form.
struct ComplexAnalysis {
  nlohmann::json report;

  int n = 0;
  CohomologyProfile profile;
  CohomologyProfile fixed_profile;
  FixedSetShape fixed;
  bool free_action = false;
  bool trivial_action = false;
  bool poincare = false;
  bool zr = false;
  bool cond = false;

  std::vector<std::size_t> tot_dims;
  std::vector<std::size_t> fixed_tot_dims;
  std::vector<std::size_t> quotient_dims;

  CheckResult e2, convergence, page_structure, euler, products, swan_leibniz, localization, free_oracle, kunneth;
  std::vector<PageDuality> duality;
  AuditReport propagation, rank_symmetry;
  Mod4Audit mod4;
  ZpActionData zp_data;
  std::vector<CongruenceVerdict> verdicts;

  /// A check failed or a validator reported "fail".
  bool has_failure() const;
  const CongruenceVerdict* verdict(const std::string& theorem) const;
};

ComplexAnalysis analyze_complex(const SimplicialGComplex& k, const AnalysisOptions& options = {});

/// Action data given algebraically.
struct ProfileInput {
  ZpActionData data;
  /// Fixed circles (3-manifolds) or fixed points (surfaces), when known.
  std::optional<std::size_t> circles;
  std::optional<std::size_t> fixed_points;
  bool closed = true;
};

/// {"manifold": profile, "fixed": profile, "n", "no_p_torsion"?, "circles"?,
/// "fixed_points"?, "closed"?}; an absent "fixed" means an empty fixed set.
ProfileInput profile_input_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProfileInput& in);
/// {"n", "manifold": [b^i], "fixed": [b^i], "circles"?}.
BettiData betti_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BettiData& d);

/// Every validator that applies to the data.
std::vector<CongruenceVerdict> profile_verdicts(const ProfileInput& in);
std::vector<CongruenceVerdict> betti_verdicts(const BettiData& d);

/// Report envelope shared by all input kinds.
nlohmann::json profile_report(const ProfileInput& in);
nlohmann::json betti_report(const BettiData& d);

/// Text rendering of a report produced by this module.
std::string render_text(const nlohmann::json& report);

}  // namespace eqss
