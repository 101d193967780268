// Gaussian elimination over F_p with lazy reduction.
//
// Rows are held as u32 lanes. A single elimination step adds at most
// (p-1)^2 to any entry, so entries only need reducing when they are read as
// a multiplier, when a row becomes the pivot row, or once the lazy budget of steps runs out.
// The inner axpy is then a plain u32 multiply-add that vectorizes.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "eqss/matrix.hpp"

namespace eqss {
namespace {

struct Workspace {
  std::size_t rows;
  std::size_t cols;
  std::uint32_t p;
  std::vector<std::uint32_t> w;

  std::uint32_t* row(std::size_t r) { return w.data() + r * cols; }
};

void reduce_row(std::uint32_t* r, std::size_t first, std::size_t last, std::uint32_t p) {
  for (std::size_t j = first; j < last; ++j) r[j] %= p;
}

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t m, std::size_t first,
          std::size_t last) {
  for (std::size_t j = first; j < last; ++j) dst[j] += m * src[j];
}

std::uint64_t lazy_budget(std::uint32_t p) {
  const std::uint64_t step = std::uint64_t{p - 1} * (p - 1);
  if (step == 0) return std::numeric_limits<std::uint64_t>::max();
  return (std::numeric_limits<std::uint32_t>::max() - p) / step;
}

// Returns pivot columns. `full` clears entries above pivots too (RREF);
// otherwise only rows below the pivot are eliminated (enough for rank).
std::vector<std::size_t> eliminate(Workspace& ws, const Field& field, bool full, bool parallel) {
  const std::uint32_t p = ws.p;
  const std::uint64_t budget = lazy_budget(p);
  std::uint64_t steps = 0;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;

  for (std::size_t col = 0; col < ws.cols && pivot_row < ws.rows; ++col) {
    std::size_t found = ws.rows;
    for (std::size_t r = pivot_row; r < ws.rows; ++r) {
      std::uint32_t& e = ws.row(r)[col];
      e %= p;
      if (e != 0) {
        found = r;
        break;
      }
    }
    if (found == ws.rows) continue;
    if (found != pivot_row) {
      std::swap_ranges(ws.row(found), ws.row(found) + ws.cols, ws.row(pivot_row));
    }
    std::uint32_t* piv = ws.row(pivot_row);
    reduce_row(piv, col, ws.cols, p);
    const std::uint32_t scale = field.inv(static_cast<Elem>(piv[col]));
    for (std::size_t j = col; j < ws.cols; ++j) piv[j] = (piv[j] * scale) % p;

    const std::size_t first_row = full ? 0 : pivot_row + 1;
    const auto n_rows = static_cast<std::ptrdiff_t>(ws.rows);
    const auto pr = static_cast<std::ptrdiff_t>(pivot_row);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(first_row); i < n_rows; ++i) {
      if (i == pr) continue;
      std::uint32_t* dst = ws.row(static_cast<std::size_t>(i));
      const std::uint32_t f = dst[col] % p;
      if (f == 0) {
        dst[col] = 0;
        continue;
      }
      axpy(dst, piv, p - f, col, ws.cols);
    }

    if (++steps >= budget) {
      for (std::size_t r = 0; r < ws.rows; ++r) reduce_row(ws.row(r), 0, ws.cols, p);
      steps = 0;
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

Workspace load(const Matrix& a) {
  Workspace ws{a.rows(), a.cols(), a.p(), {}};
  ws.w.assign(a.data().begin(), a.data().end());
  return ws;
}

RowEchelon rref_impl(const Matrix& a, bool parallel) {
  Workspace ws = load(a);
  RowEchelon out;
  out.pivots = eliminate(ws, a.field(), /*full=*/true, parallel);
  out.reduced = Matrix(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < ws.rows; ++r) {
    const std::uint32_t* src = ws.row(r);
    auto dst = out.reduced.row(r);
    for (std::size_t j = 0; j < ws.cols; ++j) dst[j] = static_cast<Elem>(src[j] % ws.p);
  }
  return out;
}

}  // namespace

RowEchelon rref(const Matrix& a) { return rref_impl(a, /*parallel=*/true); }

RowEchelon rref_serial(const Matrix& a) { return rref_impl(a, /*parallel=*/false); }

std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  Workspace ws = load(a);
  return eliminate(ws, a.field(), /*full=*/false, /*parallel=*/true).size();
}

}  // namespace eqss
