#include "eqss/exact.hpp"

#include <stdexcept>

#include "eqss/io.hpp"

namespace eqss {

ExactMatrix::ExactMatrix(std::uint32_t characteristic, std::size_t rows, std::size_t cols)
    : char_(characteristic), rows_(rows), cols_(cols), data_(rows * cols) {
  if (characteristic != 0) (void)Field(characteristic);
}

ExactMatrix ExactMatrix::from_fp(const Matrix& m) {
  ExactMatrix out(m.p(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.data_[r * m.cols() + c] = m(r, c);
  return out;
}

Rational ExactMatrix::reduce(const Rational& v) const {
  if (char_ == 0) return v;
  const Field f(char_);
  using boost::multiprecision::cpp_int;
  const cpp_int p = char_;
  cpp_int num = numerator(v) % p;
  cpp_int den = denominator(v) % p;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  const auto n = f.from_int(num.convert_to<long long>());
  const auto d = f.from_int(den.convert_to<long long>());
  return Rational(f.mul(n, f.inv(d)));
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Rational& v) { data_.at(r * cols_ + c) = reduce(v); }

std::size_t ExactMatrix::rank() const {
  std::vector<Rational> w = data_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && w[piv * cols_ + col] == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(w[piv * cols_ + j], w[rank * cols_ + j]);
    const Rational inv = reduce(Rational(1) / w[rank * cols_ + col]);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      const Rational factor = reduce(w[i * cols_ + col] * inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols_; ++j)
        w[i * cols_ + j] = reduce(w[i * cols_ + j] - factor * w[rank * cols_ + j]);
    }
    ++rank;
  }
  return rank;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(char_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = at(r, c);
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_ || char_ != rhs.char_) throw std::invalid_argument("matrix shapes do not match");
  ExactMatrix out(char_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      Rational s = 0;
      for (std::size_t k = 0; k < cols_; ++k) s += at(r, k) * rhs.at(k, c);
      out.data_[r * rhs.cols_ + c] = out.reduce(s);
    }
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

nlohmann::json ExactMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < rows_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& v = at(r, c);
      if (denominator(v) == 1 && abs(numerator(v)) < 1000000000)
        row.push_back(numerator(v).convert_to<long long>());
      else
        row.push_back(to_string(v));
    }
    rows.push_back(row);
  }
  return rows;
}

Rational parse_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError("matrix entries must be integers or strings like \"3/4\", got " + j.dump());
  const std::string s = j.get<std::string>();
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    const boost::multiprecision::cpp_int num(s.substr(0, slash));
    const boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in \"" + s + "\"");
    return Rational(num, den);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("cannot parse \"" + s + "\" as a rational number");
  }
}

std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace eqss
