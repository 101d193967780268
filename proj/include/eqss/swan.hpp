#pragma once

#include <cstddef>
#include <vector>

#include "eqss/complex.hpp"

namespace eqss {

/// One (k, l) block of a total degree.
struct TotBlock {
  int k;
  int l;
  std::size_t offset;
  std::size_t size;
};

/// D^{kl} = C^l for 0 <= k <= K, with d_h = (t - 1) on even columns, N on odd
/// ones, d_v = delta, and d = d_h + (-1)^k d_v on the total complex. The total
/// complex is the quotient by columns beyond K.
///
/// Tot^s lists its blocks with k decreasing, so an index order is also a
/// filtration order: the first cells lie deepest in the column filtration.
class SwanDoubleComplex {
 public:
  /// Throws std::invalid_argument if k_max < 2(n + 8), n the top cochain degree.
  SwanDoubleComplex(const CochainComplex& base, int k_max);

  static int default_window(int n) { return 2 * n + 16; }
  static int minimum_window(int n) { return 2 * (n + 8); }

  const CochainComplex& base() const noexcept { return base_; }
  int k_max() const noexcept { return k_max_; }
  int n() const noexcept { return n_; }
  /// Highest total degree with a nonzero Tot^s.
  int max_total_degree() const noexcept { return k_max_ + n_; }

  /// d_h on D^{kl} applied to a cochain.
  std::vector<Elem> horizontal(int k, int l, const std::vector<Elem>& a) const;
  Matrix horizontal_matrix(int k, int l) const;

  /// The signed product alpha . beta = (-1)^{k2 l} alpha u beta, where u is the
  /// cochain-level product built from the diagonal approximation. Returns an
  /// empty vector when the target lies outside the window or above degree n.
  std::vector<Elem> product(int k, int l, const std::vector<Elem>& a, int k2, int l2,
                            const std::vector<Elem>& b) const;

  const std::vector<TotBlock>& blocks(int s) const;
  std::size_t tot_dim(int s) const;
  /// The block of Tot^s with column k, or nullptr.
  const TotBlock* block(int s, int k) const;
  /// Column k of the cell at index i in Tot^s.
  int column_of(int s, std::size_t i) const;

  /// Sparse columns of d: Tot^s -> Tot^{s+1}.
  std::vector<SparseColumn> differential_columns(int s) const;
  Matrix differential_matrix(int s) const;
  std::vector<Elem> apply_differential(int s, const std::vector<Elem>& x) const;
  /// Product of total-degree elements, truncated at column K.
  std::vector<Elem> tot_product(int s, const std::vector<Elem>& x, int s2, const std::vector<Elem>& y) const;

  /// Largest s for which H^s of the truncated complex equals the untruncated one.
  int trusted_total_degree() const noexcept { return k_max_ - 2; }

  /// Hard checks of the double-complex identities and d^2 = 0.
  void verify() const;

 private:
  CochainComplex base_;
  int k_max_;
  int n_;
  std::vector<std::vector<TotBlock>> blocks_;
};

/// dim H^s(Tot) for 0 <= s <= trusted_total_degree(), by dense ranks.
std::vector<std::size_t> total_cohomology_dims(const SwanDoubleComplex& dc);

}  // namespace eqss
