#include <algorithm>
#include <stdexcept>

#include "eqss/complex.hpp"

namespace eqss {

long long CellComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t m = 0; m < counts.size(); ++m)
    chi += (m % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[m]);
  return chi;
}

CellComplex CellComplex::from_simplicial(const SimplicialGComplex& k) {
  CellComplex c;
  c.p = k.p();
  const int top = k.dimension();
  for (int m = 0; m <= top; ++m) {
    const auto& level = k.simplices(m);
    c.counts.push_back(level.size());
    std::vector<std::vector<std::uint32_t>> faces;
    std::vector<std::uint32_t> action(level.size());
    std::vector<std::int8_t> sign(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Simplex& s = level[i];
      if (m > 0) {
        std::vector<std::uint32_t> f(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
          f[j] = static_cast<std::uint32_t>(k.index_of(face));
        }
        faces.push_back(std::move(f));
      }
      // Sign of the permutation that sorts (g v_0, ..., g v_m).
      Simplex img(s.size());
      for (std::size_t j = 0; j < s.size(); ++j) img[j] = k.generator()[s[j]];
      int inversions = 0;
      for (std::size_t a = 0; a < img.size(); ++a)
        for (std::size_t b = a + 1; b < img.size(); ++b)
          if (img[a] > img[b]) ++inversions;
      sign[i] = inversions % 2 == 0 ? 1 : -1;
      action[i] = static_cast<std::uint32_t>(k.index_of(k.image(s)));
    }
    c.faces.push_back(std::move(faces));
    c.action.push_back(std::move(action));
    c.action_sign.push_back(std::move(sign));
  }
  return c;
}

CellComplex quotient_complex(const SimplicialGComplex& k) {
  if (!k.order_compatible()) {
    throw std::invalid_argument("quotient_complex needs an order-compatible action");
  }
  const CellComplex full = CellComplex::from_simplicial(k);
  CellComplex q;
  q.p = k.p();
  std::vector<std::vector<std::uint32_t>> orbit_of(full.counts.size());
  for (std::size_t m = 0; m < full.counts.size(); ++m) {
    orbit_of[m].assign(full.counts[m], UINT32_MAX);
    std::uint32_t next = 0;
    std::vector<std::vector<std::uint32_t>> faces;
    for (std::uint32_t c = 0; c < full.counts[m]; ++c) {
      if (orbit_of[m][c] != UINT32_MAX) continue;
      for (std::uint32_t x = c; orbit_of[m][x] == UINT32_MAX; x = full.action[m][x]) orbit_of[m][x] = next;
      if (m > 0) {
        std::vector<std::uint32_t> f;
        for (auto face : full.faces[m][c]) f.push_back(orbit_of[m - 1][face]);
        faces.push_back(std::move(f));
      }
      ++next;
    }
    q.counts.push_back(next);
    q.faces.push_back(std::move(faces));
    std::vector<std::uint32_t> id(next);
    for (std::uint32_t i = 0; i < next; ++i) id[i] = i;
    q.action.push_back(std::move(id));
    q.action_sign.push_back(std::vector<std::int8_t>(next, 1));
  }
  if (q.counts.empty()) q.faces.clear();
  return q;
}

CochainComplex::CochainComplex(const CellComplex& cells) : field_(cells.p) {
  const int top = cells.dimension();
  dims_ = cells.counts;
  cob_.resize(dims_.size());
  for (int l = 0; l <= top; ++l) {
    cob_[l].resize(dims_[l]);
    if (l == top) continue;
    for (std::uint32_t tau = 0; tau < dims_[l + 1]; ++tau) {
      const auto& f = cells.faces[l + 1][tau];
      for (std::size_t i = 0; i < f.size(); ++i) cob_[l][f[i]].push_back({tau, field_.sign(static_cast<long long>(i))});
    }
    for (auto& col : cob_[l]) {
      std::sort(col.begin(), col.end());
      SparseColumn merged;
      for (const auto& [row, v] : col) {
        if (!merged.empty() && merged.back().first == row) {
          merged.back().second = field_.add(merged.back().second, v);
          if (merged.back().second == 0) merged.pop_back();
        } else {
          merged.push_back({row, v});
        }
      }
      col = std::move(merged);
    }
  }
  perm_ = cells.action;
  sign_.resize(dims_.size());
  for (std::size_t l = 0; l < dims_.size(); ++l) {
    sign_[l].resize(dims_[l]);
    for (std::size_t c = 0; c < dims_[l]; ++c) sign_[l][c] = cells.action_sign[l][c] > 0 ? 1 : field_.neg(1);
  }

  // front_[m][l][c]: drop the last vertex m - l times; back_: drop the first.
  front_.resize(dims_.size());
  back_.resize(dims_.size());
  for (int m = 0; m <= top; ++m) {
    front_[m].resize(static_cast<std::size_t>(m) + 1);
    back_[m].resize(static_cast<std::size_t>(m) + 1);
    std::vector<std::uint32_t> fr(dims_[m]);
    for (std::uint32_t c = 0; c < dims_[m]; ++c) fr[c] = c;
    std::vector<std::uint32_t> bk = fr;
    front_[m][m] = fr;
    back_[m][m] = bk;
    for (int j = m; j >= 1; --j) {
      for (std::uint32_t c = 0; c < dims_[m]; ++c) {
        fr[c] = cells.faces[j][fr[c]][j];
        bk[c] = cells.faces[j][bk[c]][0];
      }
      front_[m][j - 1] = fr;
      back_[m][j - 1] = bk;
    }
  }
}

Matrix CochainComplex::coboundary(int l) const {
  Matrix d(field_, dim(l + 1), dim(l));
  if (l < 0 || l >= static_cast<int>(cob_.size())) return d;
  for (std::size_t c = 0; c < cob_[l].size(); ++c)
    for (const auto& [row, v] : cob_[l][c]) d(row, c) = v;
  return d;
}

Matrix CochainComplex::action(int l) const {
  Matrix t(field_, dim(l), dim(l));
  for (std::size_t c = 0; c < dim(l); ++c) t(perm_[l][c], c) = sign_[l][c];
  return t;
}

std::vector<Elem> CochainComplex::act(int l, const std::vector<Elem>& a, std::uint64_t e) const {
  std::vector<Elem> cur = a;
  std::vector<Elem> next(a.size());
  for (std::uint64_t i = 0; i < e % p(); ++i) {
    for (std::size_t c = 0; c < cur.size(); ++c) next[perm_[l][c]] = field_.mul(sign_[l][c], cur[c]);
    std::swap(cur, next);
  }
  return cur;
}

std::vector<Elem> CochainComplex::apply_coboundary(int l, const std::vector<Elem>& a) const {
  std::vector<Elem> out(dim(l + 1), 0);
  if (l < 0 || l + 1 > top_degree()) return out;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] == 0) continue;
    for (const auto& [row, v] : cob_[l][c]) out[row] = field_.add(out[row], field_.mul(v, a[c]));
  }
  return out;
}

std::vector<Elem> CochainComplex::cup(int l, const std::vector<Elem>& a, int l2,
                                      const std::vector<Elem>& b) const {
  const int m = l + l2;
  std::vector<Elem> out(dim(m), 0);
  if (m > top_degree()) return out;
  const auto& fr = front_[m][l];
  const auto& bk = back_[m][l2];
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = field_.mul(a[fr[c]], b[bk[c]]);
  return out;
}

void CochainComplex::verify() const {
  for (int l = 0; l + 2 <= top_degree(); ++l) {
    for (std::size_t c = 0; c < dim(l); ++c) {
      std::vector<Elem> e(dim(l), 0);
      e[c] = 1;
      const auto dd = apply_coboundary(l + 1, apply_coboundary(l, e));
      for (Elem x : dd)
        if (x != 0) throw std::logic_error("coboundary does not square to zero");
    }
  }
  for (int l = 0; l <= top_degree(); ++l) {
    for (std::size_t c = 0; c < dim(l); ++c) {
      std::vector<Elem> e(dim(l), 0);
      e[c] = 1;
      if (apply_coboundary(l, act(l, e)) != act(l + 1, apply_coboundary(l, e))) {
        throw std::logic_error("action does not commute with the coboundary");
      }
    }
    // T^p = 1 on each cell, sign included.
    for (std::uint32_t c = 0; c < dim(l); ++c) {
      std::uint32_t x = c;
      Elem s = 1;
      for (std::uint32_t i = 0; i < p(); ++i) {
        s = field_.mul(s, sign_[l][x]);
        x = perm_[l][x];
      }
      if (x != c || s != 1) throw std::logic_error("action does not have order dividing p");
    }
  }
}

std::vector<Elem> CohomologyBasis::coordinates(const std::vector<Elem>& cocycle) const {
  const Matrix both = Matrix::hstack(boundaries, representatives);
  const auto x = solve(both, cocycle);
  if (!x) throw std::invalid_argument("vector is not a cocycle");
  return std::vector<Elem>(x->begin() + static_cast<std::ptrdiff_t>(boundaries.cols()), x->end());
}

std::vector<CohomologyBasis> cohomology_bases(const CochainComplex& c) {
  std::vector<CohomologyBasis> out;
  for (int l = 0; l <= c.top_degree(); ++l) {
    CohomologyBasis h;
    h.cycles = kernel_basis(c.coboundary(l));
    h.boundaries = l == 0 ? Matrix(c.field(), c.dim(0), 0) : image_basis(c.coboundary(l - 1));
    if (!span_contains(h.cycles, h.boundaries)) throw std::logic_error("boundaries are not cycles");
    h.representatives = complement_columns(h.boundaries, h.cycles);
    out.push_back(std::move(h));
  }
  return out;
}

CohomologyProfile cohomology_gmodules(const CochainComplex& c) {
  return cohomology_gmodules(c, cohomology_bases(c));
}

CohomologyProfile cohomology_gmodules(const CochainComplex& c, const std::vector<CohomologyBasis>& bases) {
  std::vector<GModule> modules;
  long long chi_cells = 0;
  long long chi_h = 0;
  for (int l = 0; l <= c.top_degree(); ++l) {
    const auto& h = bases[l];
    const std::size_t d = h.representatives.cols();
    Matrix t(c.field(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const auto coords = h.coordinates(c.act(l, h.representatives.column(j)));
      for (std::size_t i = 0; i < d; ++i) t(i, j) = coords[i];
    }
    modules.emplace_back(std::move(t));
    const long long sign = l % 2 == 0 ? 1 : -1;
    chi_cells += sign * static_cast<long long>(c.dim(l));
    chi_h += sign * static_cast<long long>(d);
  }
  if (chi_cells != chi_h) throw std::logic_error("Euler-Poincare identity fails");
  return CohomologyProfile::from_modules(c.p(), std::move(modules));
}

PoincareCheck check_poincare_duality(const CochainComplex& c, const std::vector<CohomologyBasis>& bases) {
  PoincareCheck out;
  int n = -1;
  for (int l = 0; l < static_cast<int>(bases.size()); ++l)
    if (bases[l].representatives.cols() > 0) n = l;
  out.n = n;
  if (n < 0) {
    out.detail = "empty complex";
    return out;
  }
  if (bases[0].representatives.cols() != 1) {
    out.detail = "not connected";
    return out;
  }
  if (bases[n].representatives.cols() != 1) {
    out.detail = "top cohomology is not one-dimensional";
    return out;
  }
  out.holds = true;
  for (int l = 0; l <= n; ++l) {
    const Matrix& a = bases[l].representatives;
    const Matrix& b = bases[n - l].representatives;
    Matrix pairing(c.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        pairing(i, j) = bases[n].coordinates(c.cup(l, a.column(i), n - l, b.column(j)))[0];
    const std::size_t r = rank(pairing);
    out.pairing_ranks.push_back(r);
    if (a.cols() != b.cols() || r != a.cols()) {
      out.holds = false;
      out.detail = "cup pairing in degree " + std::to_string(l) + " is degenerate";
    }
  }
  return out;
}

}  // namespace eqss
