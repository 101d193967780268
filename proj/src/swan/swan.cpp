#include "eqss/swan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eqss {

SwanDoubleComplex::SwanDoubleComplex(const CochainComplex& base, int k_max)
    : base_(base), k_max_(k_max), n_(std::max(base.top_degree(), 0)) {
  if (k_max < minimum_window(n_)) {
    throw std::invalid_argument("column window " + std::to_string(k_max) + " is below the minimum " +
                                std::to_string(minimum_window(n_)) + " for n = " + std::to_string(n_));
  }
  const int top = base.top_degree();
  blocks_.resize(static_cast<std::size_t>(max_total_degree()) + 1);
  for (int s = 0; s <= max_total_degree(); ++s) {
    std::size_t off = 0;
    for (int k = std::min(k_max_, s); k >= std::max(0, s - top); --k) {
      if (top < 0) break;
      const int l = s - k;
      blocks_[s].push_back({k, l, off, base.dim(l)});
      off += base.dim(l);
    }
  }
}

std::vector<Elem> SwanDoubleComplex::horizontal(int k, int l, const std::vector<Elem>& a) const {
  const Field& f = base_.field();
  if (k % 2 == 0) {
    std::vector<Elem> out = base_.act(l, a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(out[i], a[i]);
    return out;
  }
  std::vector<Elem> out(a.size(), 0);
  std::vector<Elem> power = a;
  for (std::uint32_t i = 0; i < f.p(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], power[j]);
    power = base_.act(l, power);
  }
  return out;
}

Matrix SwanDoubleComplex::horizontal_matrix(int k, int l) const {
  const std::size_t d = base_.dim(l);
  Matrix m(base_.field(), d, d);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Elem> e(d, 0);
    e[c] = 1;
    const auto col = horizontal(k, l, e);
    for (std::size_t r = 0; r < d; ++r) m(r, c) = col[r];
  }
  return m;
}

std::vector<Elem> SwanDoubleComplex::product(int k, int l, const std::vector<Elem>& a, int k2, int l2,
                                             const std::vector<Elem>& b) const {
  if (k + k2 > k_max_ || l + l2 > base_.top_degree()) return {};
  const Field& f = base_.field();
  std::vector<Elem> out;
  if (k % 2 == 0) {
    out = base_.cup(l, a, l2, b);
  } else if (k2 % 2 == 0) {
    out = base_.cup(l, a, l2, base_.act(l2, b));
  } else {
    // sum_{i<j} t^i a u t^j b = sum_i t^i a u (sum_{j>i} t^j b)
    const std::uint32_t p = f.p();
    std::vector<std::vector<Elem>> tb(p);
    tb[0] = b;
    for (std::uint32_t j = 1; j < p; ++j) tb[j] = base_.act(l2, tb[j - 1]);
    std::vector<Elem> suffix(b.size(), 0);
    std::vector<Elem> ta = base_.act(l, a, p - 1);
    out.assign(base_.dim(l + l2), 0);
    for (std::uint32_t i = p; i-- > 0;) {
      if (i + 1 < p)
        for (std::size_t j = 0; j < suffix.size(); ++j) suffix[j] = f.add(suffix[j], tb[i + 1][j]);
      const auto term = base_.cup(l, ta, l2, suffix);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], term[j]);
      if (i > 0) ta = base_.act(l, ta, p - 1);  // t^{i-1} a
    }
  }
  if ((static_cast<long long>(k2) * l) % 2 != 0)
    for (auto& x : out) x = f.neg(x);
  return out;
}

const std::vector<TotBlock>& SwanDoubleComplex::blocks(int s) const {
  static const std::vector<TotBlock> none;
  if (s < 0 || s >= static_cast<int>(blocks_.size())) return none;
  return blocks_[s];
}

std::size_t SwanDoubleComplex::tot_dim(int s) const {
  const auto& b = blocks(s);
  return b.empty() ? 0 : b.back().offset + b.back().size;
}

const TotBlock* SwanDoubleComplex::block(int s, int k) const {
  for (const auto& b : blocks(s))
    if (b.k == k) return &b;
  return nullptr;
}

int SwanDoubleComplex::column_of(int s, std::size_t i) const {
  for (const auto& b : blocks(s))
    if (i >= b.offset && i < b.offset + b.size) return b.k;
  throw std::out_of_range("index outside Tot^" + std::to_string(s));
}

std::vector<SparseColumn> SwanDoubleComplex::differential_columns(int s) const {
  std::vector<SparseColumn> cols(tot_dim(s));
  const Field& f = base_.field();
  for (const auto& b : blocks(s)) {
    const TotBlock* right = block(s + 1, b.k + 1);  // (k+1, l)
    const TotBlock* up = block(s + 1, b.k);        // (k, l+1)
    const Elem vsign = f.sign(b.k);
    for (std::uint32_t c = 0; c < b.size; ++c) {
      SparseColumn& col = cols[b.offset + c];
      if (right != nullptr) {
        std::vector<Elem> e(b.size, 0);
        e[c] = 1;
        const auto h = horizontal(b.k, b.l, e);
        for (std::uint32_t r = 0; r < h.size(); ++r)
          if (h[r] != 0) col.push_back({static_cast<std::uint32_t>(right->offset + r), h[r]});
      }
      if (up != nullptr && b.l < base_.top_degree()) {
        for (const auto& [row, v] : base_.coboundary_columns(b.l)[c])
          col.push_back({static_cast<std::uint32_t>(up->offset + row), f.mul(vsign, v)});
      }
      std::sort(col.begin(), col.end());
    }
  }
  return cols;
}

Matrix SwanDoubleComplex::differential_matrix(int s) const {
  Matrix m(base_.field(), tot_dim(s + 1), tot_dim(s));
  const auto cols = differential_columns(s);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [row, v] : cols[c]) m(row, c) = v;
  return m;
}

std::vector<Elem> SwanDoubleComplex::apply_differential(int s, const std::vector<Elem>& x) const {
  const Field& f = base_.field();
  std::vector<Elem> out(tot_dim(s + 1), 0);
  for (const auto& b : blocks(s)) {
    const std::vector<Elem> a(x.begin() + static_cast<std::ptrdiff_t>(b.offset),
                              x.begin() + static_cast<std::ptrdiff_t>(b.offset + b.size));
    if (std::all_of(a.begin(), a.end(), [](Elem e) { return e == 0; })) continue;
    if (const TotBlock* right = block(s + 1, b.k + 1)) {
      const auto h = horizontal(b.k, b.l, a);
      for (std::size_t r = 0; r < h.size(); ++r) out[right->offset + r] = f.add(out[right->offset + r], h[r]);
    }
    if (const TotBlock* up = block(s + 1, b.k)) {
      const auto v = base_.apply_coboundary(b.l, a);
      const Elem sg = f.sign(b.k);
      for (std::size_t r = 0; r < v.size(); ++r)
        out[up->offset + r] = f.add(out[up->offset + r], f.mul(sg, v[r]));
    }
  }
  return out;
}

std::vector<Elem> SwanDoubleComplex::tot_product(int s, const std::vector<Elem>& x, int s2,
                                                 const std::vector<Elem>& y) const {
  const Field& f = base_.field();
  std::vector<Elem> out(tot_dim(s + s2), 0);
  for (const auto& bx : blocks(s)) {
    const std::vector<Elem> a(x.begin() + static_cast<std::ptrdiff_t>(bx.offset),
                              x.begin() + static_cast<std::ptrdiff_t>(bx.offset + bx.size));
    if (std::all_of(a.begin(), a.end(), [](Elem e) { return e == 0; })) continue;
    for (const auto& by : blocks(s2)) {
      const TotBlock* target = block(s + s2, bx.k + by.k);
      if (target == nullptr || bx.l + by.l > base_.top_degree()) continue;
      const std::vector<Elem> b(y.begin() + static_cast<std::ptrdiff_t>(by.offset),
                                y.begin() + static_cast<std::ptrdiff_t>(by.offset + by.size));
      if (std::all_of(b.begin(), b.end(), [](Elem e) { return e == 0; })) continue;
      const auto z = product(bx.k, bx.l, a, by.k, by.l, b);
      for (std::size_t i = 0; i < z.size(); ++i)
        out[target->offset + i] = f.add(out[target->offset + i], z[i]);
    }
  }
  return out;
}

void SwanDoubleComplex::verify() const {
  const int top = base_.top_degree();
  for (int l = 0; l <= top; ++l) {
    for (std::size_t c = 0; c < base_.dim(l); ++c) {
      std::vector<Elem> e(base_.dim(l), 0);
      e[c] = 1;
      for (int k = 0; k < 2; ++k) {
        const auto hh = horizontal(k + 1, l, horizontal(k, l, e));
        if (std::any_of(hh.begin(), hh.end(), [](Elem x) { return x != 0; })) {
          throw std::logic_error("horizontal differential does not square to zero");
        }
        if (base_.apply_coboundary(l, horizontal(k, l, e)) !=
            horizontal(k, l + 1, base_.apply_coboundary(l, e))) {
          throw std::logic_error("horizontal and vertical differentials do not commute");
        }
      }
    }
    for (int k = 1; k + 2 <= std::min(k_max_, 4); ++k) {
      if (!(horizontal_matrix(k, l) == horizontal_matrix(k + 2, l))) {
        throw std::logic_error("columns are not 2-periodic");
      }
    }
  }
  for (int s = 0; s + 1 <= max_total_degree(); ++s) {
    const auto cols = differential_columns(s);
    const auto next = differential_columns(s + 1);
    const Field& f = base_.field();
    std::vector<Elem> acc(tot_dim(s + 2), 0);
    for (const auto& col : cols) {
      std::fill(acc.begin(), acc.end(), 0);
      for (const auto& [mid, v] : col)
        for (const auto& [row, w] : next[mid]) acc[row] = f.add(acc[row], f.mul(v, w));
      if (std::any_of(acc.begin(), acc.end(), [](Elem x) { return x != 0; })) {
        throw std::logic_error("total differential does not square to zero");
      }
    }
  }
}

std::vector<std::size_t> total_cohomology_dims(const SwanDoubleComplex& dc) {
  const int top = dc.trusted_total_degree();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int s = 0; s <= top; ++s) ranks[s] = rank(dc.differential_matrix(s));
  std::vector<std::size_t> dims;
  for (int s = 0; s <= top; ++s) {
    const std::size_t in = s == 0 ? 0 : ranks[s - 1];
    dims.push_back(dc.tot_dim(s) - ranks[s] - in);
  }
  return dims;
}

}  // namespace eqss
