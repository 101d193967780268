#include <algorithm>
#include <stdexcept>
#include <string>

#include "eqss/spectral.hpp"

namespace eqss {
namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

SparseColumn compress(const std::vector<Elem>& dense, std::size_t last) {
  SparseColumn out;
  for (std::size_t i = 0; i <= last && i < dense.size(); ++i)
    if (dense[i] != 0) out.push_back({static_cast<std::uint32_t>(i), dense[i]});
  return out;
}

void axpy(const Field& f, std::vector<Elem>& acc, Elem c, const SparseColumn& col) {
  for (const auto& [row, v] : col) acc[row] = f.sub(acc[row], f.mul(c, v));
}

}  // namespace

SpectralSequence::SpectralSequence(const SwanDoubleComplex& dc) : dc_(dc) {
  const Field& f = dc.base().field();
  const int top = dc.max_total_degree();
  degrees_.resize(static_cast<std::size_t>(std::max(top, -1) + 1));
  // Births for the next degree: (birth cell, death cell, reduced column).
  std::vector<std::tuple<std::uint32_t, std::uint32_t, SparseColumn>> births;

  for (int s = 0; s <= top; ++s) {
    Degree& g = degrees_[s];
    const std::size_t size = dc.tot_dim(s);
    const std::size_t next_size = dc.tot_dim(s + 1);
    g.role.assign(size, CellRole::kEssential);
    g.partner.assign(size, kNone);
    g.length.assign(size, -1);
    g.w.assign(size, {});
    for (auto& [a, b, col] : births) {
      g.role[a] = CellRole::kBirth;
      g.partner[a] = b;
      g.length[a] = dc.column_of(s, a) - dc.column_of(s - 1, b);
      g.w[a] = std::move(col);
    }
    births.clear();

    const auto d = dc.differential_columns(s);
    std::vector<std::uint32_t> pivot_of_row(next_size, kNone);
    std::vector<SparseColumn> reduced(size);
    std::vector<Elem> r_acc(next_size);
    std::vector<Elem> v_acc(size);

    for (std::uint32_t j = 0; j < size; ++j) {
      if (g.role[j] == CellRole::kBirth) continue;  // cleared: its column reduces to zero
      std::fill(r_acc.begin(), r_acc.end(), 0);
      std::fill(v_acc.begin(), v_acc.end(), 0);
      for (const auto& [row, v] : d[j]) r_acc[row] = v;
      v_acc[j] = 1;
      std::size_t low = d[j].empty() ? kNone : d[j].back().first;
      while (low != kNone && pivot_of_row[low] != kNone) {
        const std::uint32_t i = pivot_of_row[low];
        const Elem c = f.mul(r_acc[low], f.inv(reduced[i].back().second));
        axpy(f, r_acc, c, reduced[i]);
        axpy(f, v_acc, c, g.w[i]);
        std::size_t next = kNone;
        for (std::size_t x = low; x-- > 0;)
          if (r_acc[x] != 0) {
            next = x;
            break;
          }
        low = next;
      }
      g.w[j] = compress(v_acc, j);
      if (low == kNone) continue;
      reduced[j] = compress(r_acc, low);
      pivot_of_row[low] = j;
      g.role[j] = CellRole::kDeath;
      g.partner[j] = static_cast<std::uint32_t>(low);
      g.length[j] = dc.column_of(s + 1, low) - dc.column_of(s, j);
      births.emplace_back(static_cast<std::uint32_t>(low), j, reduced[j]);
    }
  }
}

int SpectralSequence::trusted_column(int r) const noexcept {
  return k_max() - 2 * std::min(std::max(r, 1), final_page());
}

bool SpectralSequence::alive(int s, std::size_t i, int r) const {
  const Degree& g = degrees_[s];
  return g.role[i] == CellRole::kEssential || g.length[i] >= r;
}

std::vector<std::uint32_t> SpectralSequence::basis(int r, int k, int l) const {
  std::vector<std::uint32_t> out;
  const int s = k + l;
  if (k < 0 || l < 0 || l > n() || s >= static_cast<int>(degrees_.size())) return out;
  const TotBlock* b = dc_.block(s, k);
  if (b == nullptr) return out;
  for (std::size_t i = b->offset; i < b->offset + b->size; ++i)
    if (alive(s, i, r)) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::size_t SpectralSequence::dim(int r, int k, int l) const { return basis(r, k, l).size(); }

Matrix SpectralSequence::differential(int r, int k, int l) const {
  const auto src = basis(r, k, l);
  const auto dst = basis(r, k + r, l - r + 1);
  Matrix m(dc_.base().field(), dst.size(), src.size());
  const int s = k + l;
  for (std::size_t j = 0; j < src.size(); ++j) {
    const std::uint32_t c = src[j];
    if (degrees_[s].role[c] != CellRole::kDeath || degrees_[s].length[c] != r) continue;
    const auto it = std::lower_bound(dst.begin(), dst.end(), degrees_[s].partner[c]);
    if (it == dst.end() || *it != degrees_[s].partner[c]) {
      throw std::logic_error("d_r target missing from the page basis");
    }
    m(static_cast<std::size_t>(it - dst.begin()), j) = 1;
  }
  return m;
}

std::vector<Elem> SpectralSequence::basis_vector(int s, std::size_t i) const {
  std::vector<Elem> out(dc_.tot_dim(s), 0);
  for (const auto& [row, v] : degrees_.at(s).w.at(i)) out[row] = v;
  return out;
}

std::vector<Elem> SpectralSequence::representative(int r, int k, int l, std::size_t i) const {
  return basis_vector(k + l, basis(r, k, l).at(i));
}

std::vector<Elem> SpectralSequence::lift(int r, int k, int l, const std::vector<Elem>& coords) const {
  const auto b = basis(r, k, l);
  if (coords.size() != b.size()) throw std::invalid_argument("class has the wrong dimension");
  const Field& f = dc_.base().field();
  const int s = k + l;
  std::vector<Elem> out(dc_.tot_dim(s), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (coords[i] == 0) continue;
    for (const auto& [row, v] : degrees_[s].w[b[i]]) out[row] = f.add(out[row], f.mul(coords[i], v));
  }
  return out;
}

std::vector<Elem> SpectralSequence::project(int r, int k, int l, const std::vector<Elem>& z) const {
  const auto b = basis(r, k, l);
  std::vector<Elem> coords(b.size(), 0);
  const int s = k + l;
  const TotBlock* blk = dc_.block(s, k);
  if (blk == nullptr) return coords;
  if (z.size() != dc_.tot_dim(s)) throw std::invalid_argument("vector is not in the right total degree");
  for (std::size_t i = blk->offset + blk->size; i < z.size(); ++i)
    if (z[i] != 0) throw std::logic_error("element is not in filtration F^" + std::to_string(k));
  const auto dz = dc_.apply_differential(s, z);
  for (const auto& nb : dc_.blocks(s + 1)) {
    if (nb.k >= k + r) continue;
    for (std::size_t i = nb.offset; i < nb.offset + nb.size; ++i)
      if (dz[i] != 0) {
        throw std::logic_error("element does not survive to page " + std::to_string(r));
      }
  }

  const Field& f = dc_.base().field();
  const Degree& g = degrees_[s];
  const std::size_t off = blk->offset;
  std::vector<Elem> y(z.begin() + static_cast<std::ptrdiff_t>(off),
                      z.begin() + static_cast<std::ptrdiff_t>(off + blk->size));
  for (std::size_t i = off + blk->size; i-- > off;) {
    if (y[i - off] == 0) continue;
    const SparseColumn& w = g.w[i];
    const Elem lambda = f.mul(y[i - off], f.inv(w.back().second));
    auto it = std::lower_bound(w.begin(), w.end(), std::pair<std::uint32_t, Elem>{static_cast<std::uint32_t>(off), 0});
    for (; it != w.end(); ++it) y[it->first - off] = f.sub(y[it->first - off], f.mul(lambda, it->second));
    if (alive(s, i, r)) {
      const auto pos = std::lower_bound(b.begin(), b.end(), static_cast<std::uint32_t>(i));
      coords[static_cast<std::size_t>(pos - b.begin())] = lambda;
    } else if (g.role[i] == CellRole::kDeath) {
      throw std::logic_error("element has a component that does not survive to page " + std::to_string(r));
    }
  }
  return coords;
}

std::vector<Elem> SpectralSequence::product(int r, int k, int l, const std::vector<Elem>& a, int k2, int l2,
                                            const std::vector<Elem>& b) const {
  const auto x = lift(r, k, l, a);
  const auto y = lift(r, k2, l2, b);
  const auto z = dc_.tot_product(k + l, x, k2 + l2, y);
  if (z.empty() || dc_.block(k + l + k2 + l2, k + k2) == nullptr) return std::vector<Elem>(dim(r, k + k2, l + l2), 0);
  return project(r, k + k2, l + l2, z);
}

std::vector<std::uint32_t> SpectralSequence::denominator_cells(int r, int k, int l) const {
  std::vector<std::uint32_t> out;
  const int s = k + l;
  if (s < 0 || s >= static_cast<int>(degrees_.size())) return out;
  const Degree& g = degrees_[s];
  for (std::uint32_t i = 0; i < g.role.size(); ++i) {
    const int col = dc_.column_of(s, i);
    if (col < k) continue;
    if (col >= k + 1) {
      // Z_{r-1}^{k+1}
      if (g.role[i] != CellRole::kDeath || col + g.length[i] >= k + r) out.push_back(i);
    } else if (g.role[i] == CellRole::kBirth && g.length[i] <= r - 1) {
      // B_{r-1}^k
      out.push_back(i);
    }
  }
  return out;
}

std::size_t SpectralSequence::stored_entries() const {
  std::size_t total = 0;
  for (const auto& g : degrees_)
    for (const auto& w : g.w) total += w.size();
  return total;
}

namespace {

// Number of leading Tot^s coordinates lying in F^k.
std::size_t prefix_end(const SwanDoubleComplex& dc, int s, int k) {
  std::size_t end = 0;
  for (const auto& b : dc.blocks(s))
    if (b.k >= k) end = b.offset + b.size;
  return end;
}

// Basis (columns) of Z_r^k in Tot^s: x in F^k with dx in F^{k+r}.
Matrix cycles_to_page(const SwanDoubleComplex& dc, int s, int r, int k) {
  const Field& f = dc.base().field();
  const std::size_t dim = dc.tot_dim(s);
  const std::size_t cols = prefix_end(dc, s, std::max(k, 0));
  const Matrix d = dc.differential_matrix(s);
  const std::size_t first_row = prefix_end(dc, s + 1, k + r);
  Matrix sub(f, d.rows() - first_row, cols);
  for (std::size_t i = first_row; i < d.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) sub(i - first_row, j) = d(i, j);
  const Matrix ker = kernel_basis(sub);
  Matrix out(f, dim, ker.cols());
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) out(i, j) = ker(i, j);
  return out;
}

}  // namespace

std::size_t reference_page_dim(const SwanDoubleComplex& dc, int r, int k, int l) {
  if (k < 0 || l < 0 || l > dc.n() || dc.block(k + l, k) == nullptr) return 0;
  const int s = k + l;
  const Matrix z = cycles_to_page(dc, s, r, k);
  const Matrix z_next = cycles_to_page(dc, s, r - 1, k + 1);
  Matrix b(dc.base().field(), dc.tot_dim(s), 0);
  if (s > 0) b = dc.differential_matrix(s - 1) * cycles_to_page(dc, s - 1, r - 1, k - r + 1);
  const Matrix denom = Matrix::hstack(z_next, b);
  return subquotient_dim(z, denom);
}

}  // namespace eqss
