#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqss/gmodule.hpp"
#include "eqss/io.hpp"
#include "eqss/matrix.hpp"

namespace eqss {

using Simplex = std::vector<std::uint32_t>;

/// Finite simplicial complex with a Z/p action given by a vertex permutation.
class SimplicialGComplex {
 public:
  /// Validates face closure, the permutation, its order and that it maps
  /// simplices to simplices. Every vertex index is a 0-simplex.
  SimplicialGComplex(std::uint32_t p, std::size_t vertex_count, std::vector<std::uint32_t> generator,
                     const std::vector<Simplex>& simplices);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t vertex_count() const noexcept { return generator_.size(); }
  const std::vector<std::uint32_t>& generator() const noexcept { return generator_; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(std::size_t d) const { return by_dim_.at(d); }
  std::size_t count(std::size_t d) const { return d < by_dim_.size() ? by_dim_[d].size() : 0; }
  std::size_t cell_count() const;
  /// Index of a sorted simplex in simplices(s.size()-1); throws if absent.
  std::size_t index_of(const Simplex& s) const;
  /// Image of the simplex under the generator, sorted.
  Simplex image(const Simplex& s) const;

  /// The generator carries every simplex onto its image in increasing order.
  bool order_compatible() const;
  /// A simplex mapped to itself setwise is fixed pointwise.
  bool regular() const;
  bool trivial_action() const;
  long long euler_characteristic() const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> generator_;
  std::vector<std::vector<Simplex>> by_dim_;  // each sorted lexicographically
};

/// Parse {"p", "vertices", "generator", "simplices"}. Errors carry the line of
/// the offending item when the input text is available.
SimplicialGComplex complex_from_json(const std::string& text);
nlohmann::json to_json(const SimplicialGComplex& k);

/// Vertices are the simplices of k ordered by (dimension, index); simplices
/// are chains. The induced action preserves that order.
SimplicialGComplex barycentric_subdivision(const SimplicialGComplex& k);

/// Returns k itself if it is order-compatible and regular, otherwise its
/// barycentric subdivision (a second one only if the first is not regular).
SimplicialGComplex validate_and_regularize(const SimplicialGComplex& k);

/// Full subcomplex on the fixed vertices, re-indexed in increasing order,
/// with the trivial action.
SimplicialGComplex fixed_subcomplex(const SimplicialGComplex& k);

/// Ordered Delta-complex: cells per dimension with face maps d_0..d_m, and a
/// cellular Z/p action that carries d_i to d_i.
struct CellComplex {
  std::uint32_t p = 2;
  std::vector<std::size_t> counts;                            // cells per dimension
  std::vector<std::vector<std::vector<std::uint32_t>>> faces;  // faces[m][c][i] = d_i c, m >= 1
  std::vector<std::vector<std::uint32_t>> action;             // action[m][c] = g c
  std::vector<std::vector<std::int8_t>> action_sign;          // orientation sign of g on c

  int dimension() const noexcept { return static_cast<int>(counts.size()) - 1; }
  std::size_t count(std::size_t m) const { return m < counts.size() ? counts[m] : 0; }
  long long euler_characteristic() const;

  static CellComplex from_simplicial(const SimplicialGComplex& k);
};

/// Orbit complex of a regular, order-compatible complex: one cell per orbit,
/// represented by its smallest simplex, faces taken orbit-wise. Trivial action.
CellComplex quotient_complex(const SimplicialGComplex& k);

/// Sparse column: (row, value) pairs, rows increasing.
using SparseColumn = std::vector<std::pair<std::uint32_t, Elem>>;

/// Cochains over F_p with the simplicial coboundary and the action
/// (T a)(s) = sign * a(g^{-1} s), i.e. T e_s = sign * e_{g s}.
class CochainComplex {
 public:
  explicit CochainComplex(const CellComplex& cells);

  const Field& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  /// Top degree with cells, -1 if empty.
  int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int l) const { return l >= 0 && l < static_cast<int>(dims_.size()) ? dims_[l] : 0; }

  /// Column s of delta_l: C^l -> C^{l+1}.
  const std::vector<SparseColumn>& coboundary_columns(int l) const { return cob_.at(l); }
  Matrix coboundary(int l) const;
  Matrix action(int l) const;

  /// T^e applied to an l-cochain.
  std::vector<Elem> act(int l, const std::vector<Elem>& a, std::uint64_t e = 1) const;
  /// Image of basis cell c under T: (target cell, sign).
  std::pair<std::uint32_t, Elem> act_on_cell(int l, std::uint32_t c) const {
    return {perm_[l][c], sign_[l][c]};
  }
  std::vector<Elem> apply_coboundary(int l, const std::vector<Elem>& a) const;

  /// Alexander-Whitney product; zero cochain in degree l+l2 if beyond the top.
  std::vector<Elem> cup(int l, const std::vector<Elem>& a, int l2, const std::vector<Elem>& b) const;
  /// The 0-cochain taking the value 1 on every vertex.
  std::vector<Elem> unit() const { return std::vector<Elem>(dim(0), 1); }

  /// front(m, l)[c] = front l-face of the m-cell c; back(m, l)[c] likewise.
  const std::vector<std::uint32_t>& front(int m, int l) const { return front_[m][l]; }
  const std::vector<std::uint32_t>& back(int m, int l) const { return back_[m][l]; }

  /// Hard checks: delta^2 = 0, T delta = delta T, T^p = 1.
  void verify() const;

 private:
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<SparseColumn>> cob_;
  std::vector<std::vector<std::uint32_t>> perm_;
  std::vector<std::vector<Elem>> sign_;
  std::vector<std::vector<std::vector<std::uint32_t>>> front_;
  std::vector<std::vector<std::vector<std::uint32_t>>> back_;
};

/// H^l with representatives; used for the profile and for cup pairings.
struct CohomologyBasis {
  Matrix representatives;  // columns, dim C^l x dim H^l
  Matrix cycles;           // canonical basis of ker delta_l
  Matrix boundaries;       // canonical basis of im delta_{l-1}
  /// Coordinates of a cocycle in the representative basis.
  std::vector<Elem> coordinates(const std::vector<Elem>& cocycle) const;
};

std::vector<CohomologyBasis> cohomology_bases(const CochainComplex& c);

/// Per-degree cohomology G-modules for the action T (induced by g^{-1}).
CohomologyProfile cohomology_gmodules(const CochainComplex& c);
CohomologyProfile cohomology_gmodules(const CochainComplex& c, const std::vector<CohomologyBasis>& bases);

/// Cup pairings H^l x H^{n-l} -> H^n = F_p for n the top cohomology degree.
struct PoincareCheck {
  bool holds = false;
  int n = -1;
  std::vector<std::size_t> pairing_ranks;
  std::string detail;
};
PoincareCheck check_poincare_duality(const CochainComplex& c, const std::vector<CohomologyBasis>& bases);

}  // namespace eqss
