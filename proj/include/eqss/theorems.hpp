#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "eqss/builders.hpp"
#include "eqss/gmodule.hpp"
#include "eqss/verdict.hpp"

namespace eqss {

/// A Z/p action on a PD_{F_p}(n) space M, seen through F_p cohomology.
struct ZpActionData {
  CohomologyProfile manifold;
  /// Cohomology of the fixed set (trivial action); no degrees when empty.
  CohomologyProfile fixed;
  int n = 0;
  /// H^*(M; Z) has no p-torsion. Asserted by the caller.
  bool no_p_torsion = true;
  /// Result of a cup-pairing check on M; nullopt falls back to the Betti
  /// numbers of the profile.
  std::optional<bool> poincare;
  /// Condition (cond) on the computed spectral sequence; nullopt means not
  /// computed, which is accepted only for n <= 3.
  std::optional<bool> cond;
};

bool fixed_set_nonempty(const ZpActionData& d);

CongruenceVerdict verify_theorem_zp(const ZpActionData& d);
CongruenceVerdict verify_theorem_zp_fp(const ZpActionData& d);
CongruenceVerdict verify_chi_t(const ZpActionData& d);
/// sum_{i>=0} t^{k+i}(M^G) <= sum_{i>=0} t^{k+i}(M).
CongruenceVerdict verify_t_inequality(const ZpActionData& d, std::size_t k);
/// The inequality for every k up to the top degree; the first failing k is
/// reported, otherwise k = 0.
CongruenceVerdict verify_t_inequalities(const ZpActionData& d);
/// Parity of the number s of fixed circles of a nice action on a 3-manifold.
CongruenceVerdict verify_sokolov(const ZpActionData& d, std::size_t circles);
/// Fixed-point count of an action on a closed connected surface.
CongruenceVerdict verify_bryan(const ZpActionData& d, std::size_t fixed_points, bool closed);

/// Torus congruence on rational Betti data, with the 3-manifold circle
/// parities when data.n = 3 and data.circles > 0.
CongruenceVerdict verify_torus(const BettiData& data);
/// sum b^i = chi mod 4 for an even-dimensional PD space.
CongruenceVerdict verify_lemma_2n(const std::vector<std::size_t>& betti, int n);

}  // namespace eqss
