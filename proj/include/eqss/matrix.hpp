#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eqss/field.hpp"

namespace eqss {

/// Dense row-major matrix over F_p.
///
/// Subspaces are passed around as matrices whose *columns* span them. The
/// canonical basis of a subspace is its reduced column-echelon form, so equal
/// subspaces always produce identical basis matrices.
class Matrix {
 public:
  Matrix() : field_(2) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(std::uint32_t p, std::size_t rows, std::size_t cols) : Matrix(Field(p), rows, cols) {}

  static Matrix identity(Field field, std::size_t n);
  /// Entries are reduced mod p; every row must have the same length.
  static Matrix from_rows(Field field, const std::vector<std::vector<long long>>& rows);
  static Matrix from_columns(Field field, std::size_t rows,
                             const std::vector<std::vector<Elem>>& columns);

  const Field& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v) { (*this)(r, c) = field_.from_int(v); }

  std::span<const Elem> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem> column(std::size_t c) const;
  const std::vector<Elem>& data() const noexcept { return data_; }

  Matrix transpose() const;
  Matrix pow(std::uint64_t e) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Elem s) const;
  std::vector<Elem> apply(std::span<const Elem> v) const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  bool operator==(const Matrix& rhs) const noexcept {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  /// Horizontal concatenation [a | b].
  static Matrix hstack(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // increasing
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form; the elimination sweep runs in parallel (OpenMP)
/// and is bit-identical to rref_serial.
RowEchelon rref(const Matrix& a);
/// Single-threaded reference implementation of rref.
RowEchelon rref_serial(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Canonical basis (as columns) of ker(a); shape cols(a) x nullity.
Matrix kernel_basis(const Matrix& a);
/// Canonical basis (as columns) of the column space of a; shape rows(a) x rank.
Matrix image_basis(const Matrix& a);
/// Canonical basis of the span of the columns of `spanning`.
Matrix canonical_basis(const Matrix& spanning);

/// Some x with a*x = b, or nullopt when b is not in the image.
std::optional<std::vector<Elem>> solve(const Matrix& a, std::span<const Elem> b);

/// True iff every column of `sub` lies in the column span of `basis`.
bool span_contains(const Matrix& basis, const Matrix& sub);

/// dim span(z) - dim span(b). Throws std::invalid_argument unless span(b) is
/// contained in span(z).
std::size_t subquotient_dim(const Matrix& z, const Matrix& b);

/// Columns of `candidates` completing `base` to a basis of span(base, candidates),
/// chosen greedily left to right.
Matrix complement_columns(const Matrix& base, const Matrix& candidates);

}  // namespace eqss
