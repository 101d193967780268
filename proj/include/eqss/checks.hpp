#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eqss/gmodule.hpp"
#include "eqss/spectral.hpp"

namespace eqss {

/// Outcome of an exhaustive check: how many instances were examined and a
/// description of each one that failed.
struct CheckResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  void expect(bool condition, const std::string& what);
  void merge(const CheckResult& other);
};

/// dim E_2^{kl} = dim H^k(Z/p; H^l) for every trusted (k, l).
CheckResult check_e2_identification(const SpectralSequence& ss, const CohomologyProfile& profile);

/// Sum over k + l = s of dim E_{n+2}^{kl} equals dim H^s(Tot), trusted s.
CheckResult check_convergence(const SpectralSequence& ss, const std::vector<std::size_t>& tot_dims);

/// d_r d_r = 0 and dim E_{r+1} = dim ker d_r - rank d_r on trusted cells,
/// plus 2-periodicity of page dims in k for k >= r.
CheckResult check_page_structure(const SpectralSequence& ss);

/// Twice the averaged Euler characteristic of page r, from two consecutive
/// periodic columns.
long long doubled_page_euler(const SpectralSequence& ss, int r);
/// doubled_page_euler is the same for every r >= 2.
CheckResult check_euler_invariance(const SpectralSequence& ss);

/// Every differential into row 0 vanishes in the trusted window.
bool check_zr(const SpectralSequence& ss);
/// Every odd-page differential (r > 1) with source column k >= n vanishes.
bool check_condition_cond(const SpectralSequence& ss);

struct ProductCheckOptions {
  int page = 2;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  /// Also check the E_2 vanishing for two odd columns (nice actions, odd p).
  bool odd_odd_vanishing = false;
};

/// Random checks of the page product: unit law, Leibniz for d_r, graded
/// commutativity, independence of the representatives and, optionally, the
/// odd-odd vanishing at E_2.
CheckResult check_product_laws(const SpectralSequence& ss, const ProductCheckOptions& options);

/// Cochain-level Leibniz for the Swan product on random pairs.
CheckResult check_swan_leibniz(const SwanDoubleComplex& dc, std::size_t samples, std::uint64_t seed);

/// dims of H^*(Tot) of X and of its fixed set agree for n < s <= limit.
CheckResult check_localization(const std::vector<std::size_t>& whole, const std::vector<std::size_t>& fixed, int n);
/// dims of H^s(Tot) for a trivial action over F_p: the sum of dim H^l over l <= s.
std::vector<std::size_t> kunneth_dims(const std::vector<std::size_t>& betti, std::size_t count);
/// dims of H^s(Tot) equal the given cohomology dims (zero beyond them).
CheckResult check_free_oracle(const std::vector<std::size_t>& tot_dims, const std::vector<std::size_t>& quotient);

}  // namespace eqss
