#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eqss/swan.hpp"

namespace eqss {

/// Role of a cell of Tot^s after the filtered reduction of d.
enum class CellRole : std::uint8_t {
  kEssential,  // survives to E_infinity
  kBirth,      // lowest term of d(V_b) for a death b in degree s-1
  kDeath,      // d(V_c) != 0; paired with a birth in degree s+1
};

/// Pages E_r (r >= 1) of the column-filtration spectral sequence of a Swan
/// double complex.
///
/// Each Tot^s is reduced in filtration order, R = D V with V unitriangular.
/// The vectors W_c (V_c for essential and death cells, the reduced column R_b
/// for a birth c) form a basis of Tot^s whose lowest term is c. A pair
/// (birth a, death b) has length L = col(a) - col(b); both ends live on pages
/// r <= L and d_L carries [W_b] to [W_a]. Essential cells live forever.
class SpectralSequence {
 public:
  explicit SpectralSequence(const SwanDoubleComplex& dc);

  const SwanDoubleComplex& complex() const noexcept { return dc_; }
  int n() const noexcept { return dc_.n(); }
  int k_max() const noexcept { return dc_.k_max(); }
  /// Page after which every differential vanishes.
  int final_page() const noexcept { return n() + 2; }

  /// Largest column whose page-r data agrees with the untruncated complex.
  int trusted_column(int r) const noexcept;
  bool trusted(int r, int k) const noexcept { return k >= 0 && k <= trusted_column(r); }
  /// Largest total degree whose cells are all trusted on the final page.
  int trusted_total_degree() const noexcept { return trusted_column(final_page()); }

  std::size_t dim(int r, int k, int l) const;
  /// Indices (into Tot^{k+l}) of the cells spanning E_r^{kl}, increasing.
  std::vector<std::uint32_t> basis(int r, int k, int l) const;
  /// d_r^{kl} as a dim(r, k+r, l-r+1) x dim(r, k, l) matrix.
  Matrix differential(int r, int k, int l) const;

  /// Tot representative of basis element i of E_r^{kl}.
  std::vector<Elem> representative(int r, int k, int l, std::size_t i) const;
  /// Tot representative of the class with the given coordinates.
  std::vector<Elem> lift(int r, int k, int l, const std::vector<Elem>& coords) const;
  /// Class of z in E_r^{kl}. Throws std::logic_error unless z lies in F^k and
  /// d z lies in F^{k+r}.
  std::vector<Elem> project(int r, int k, int l, const std::vector<Elem>& z) const;
  /// Induced product E_r^{kl} x E_r^{k2,l2} -> E_r^{k+k2, l+l2}, computed on
  /// Tot representatives.
  std::vector<Elem> product(int r, int k, int l, const std::vector<Elem>& a, int k2, int l2,
                            const std::vector<Elem>& b) const;
  /// Cells whose basis vectors span Z_{r-1}^{k+1} + B_{r-1}^k inside
  /// Tot^{k+l}; adding any combination of them to a representative leaves its
  /// class unchanged.
  std::vector<std::uint32_t> denominator_cells(int r, int k, int l) const;
  /// The basis vector W_i of Tot^s, dense.
  std::vector<Elem> basis_vector(int s, std::size_t i) const;

  CellRole role(int s, std::size_t i) const { return degrees_.at(s).role[i]; }
  /// Total number of stored nonzero entries in the W basis.
  std::size_t stored_entries() const;

 private:
  struct Degree {
    std::vector<CellRole> role;
    std::vector<std::uint32_t> partner;  // index in Tot^{s+1} (death) or Tot^{s-1} (birth)
    std::vector<std::int32_t> length;    // pair length, -1 for essential cells
    std::vector<SparseColumn> w;
  };

  bool alive(int s, std::size_t i, int r) const;

  const SwanDoubleComplex& dc_;
  std::vector<Degree> degrees_;
};

/// E_r^{kl} computed densely as Z_r^k / (Z_{r-1}^{k+1} + B_{r-1}^k); an
/// independent check of SpectralSequence::dim on small complexes.
std::size_t reference_page_dim(const SwanDoubleComplex& dc, int r, int k, int l);

}  // namespace eqss
