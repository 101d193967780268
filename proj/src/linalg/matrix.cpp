#include "eqss/matrix.hpp"

#include <stdexcept>
#include <string>

namespace eqss {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows,
                            const std::vector<std::vector<Elem>>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = static_cast<Elem>(columns[c][r] % field.p());
  }
  return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of a non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                                std::to_string(rhs.cols_));
  }
  Matrix out(field_, rows_, rhs.cols_);
  const std::uint32_t p = field_.p();
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      const Elem* b = rhs.data_.data() + k * rhs.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] += a * b[j];
    }
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = static_cast<Elem>(acc[j] % p);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference shape");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], s);
  return out;
}

std::vector<Elem> Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const Elem* a = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{a[c]} * v[c];
    out[r] = static_cast<Elem>(acc % field_.p());
  }
  return out;
}

bool Matrix::is_zero() const noexcept {
  for (Elem e : data_)
    if (e != 0) return false;
  return true;
}

bool Matrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("column block out of range");
  Matrix out(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
  }
  return out;
}

namespace {

void check_rank_nullity(std::size_t rank, std::size_t nullity, std::size_t cols) {
  if (rank + nullity != cols) throw std::logic_error("rank-nullity violated");
}

}  // namespace

Matrix canonical_basis(const Matrix& spanning) {
  const RowEchelon e = rref(spanning.transpose());
  Matrix out(spanning.field(), spanning.rows(), e.rank());
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t r = 0; r < spanning.rows(); ++r) out(r, i) = e.reduced(i, r);
  return out;
}

Matrix image_basis(const Matrix& a) { return canonical_basis(a); }

Matrix kernel_basis(const Matrix& a) {
  const RowEchelon e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  check_rank_nullity(e.rank(), free.size(), n);

  const Field& f = a.field();
  Matrix k(f, n, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) k(e.pivots[i], j) = f.neg(e.reduced(i, free[j]));
  }
  return canonical_basis(k);
}

std::optional<std::vector<Elem>> solve(const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = static_cast<Elem>(b[r] % a.p());
  }
  const RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<Elem> x(a.cols(), 0);
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

bool span_contains(const Matrix& basis, const Matrix& sub) {
  if (basis.rows() != sub.rows()) throw std::invalid_argument("span_contains: ambient mismatch");
  return rank(Matrix::hstack(basis, sub)) == rank(basis);
}

std::size_t subquotient_dim(const Matrix& z, const Matrix& b) {
  const std::size_t rz = rank(z);
  const std::size_t rzb = rank(Matrix::hstack(z, b));
  if (rzb != rz) throw std::invalid_argument("subquotient: span(B) is not contained in span(Z)");
  return rz - rank(b);
}

Matrix complement_columns(const Matrix& base, const Matrix& candidates) {
  // Pivots of rref([base | candidates]) beyond base's columns pick the
  // leftmost independent candidates.
  const RowEchelon e = rref(Matrix::hstack(base, candidates));
  std::vector<std::size_t> chosen;
  for (std::size_t c : e.pivots)
    if (c >= base.cols()) chosen.push_back(c - base.cols());
  Matrix out(candidates.field(), candidates.rows(), chosen.size());
  for (std::size_t j = 0; j < chosen.size(); ++j)
    for (std::size_t r = 0; r < candidates.rows(); ++r) out(r, j) = candidates(r, chosen[j]);
  return out;
}

}  // namespace eqss
