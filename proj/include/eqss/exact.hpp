#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqss/matrix.hpp"

namespace eqss {

using Rational = boost::multiprecision::cpp_rational;

/// Small dense matrix over Q (characteristic 0) or F_p. Used for page data
/// that may come from outside the F_p pipeline.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::uint32_t characteristic, std::size_t rows, std::size_t cols);
  static ExactMatrix from_fp(const Matrix& m);

  std::uint32_t characteristic() const noexcept { return char_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores v, reduced mod p in positive characteristic.
  void set(std::size_t r, std::size_t c, const Rational& v);

  std::size_t rank() const;
  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  bool is_zero() const;
  bool operator==(const ExactMatrix&) const = default;

  nlohmann::json to_json() const;

 private:
  Rational reduce(const Rational& v) const;

  std::uint32_t char_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// An integer or a string "a" / "a/b".
Rational parse_rational(const nlohmann::json& j);
std::string to_string(const Rational& v);

}  // namespace eqss
