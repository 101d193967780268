#pragma once

#include <random>
#include <vector>

#include "eqss/matrix.hpp"

namespace eqss::testing {

inline Matrix random_matrix(std::mt19937_64& rng, std::uint32_t p, std::size_t rows, std::size_t cols,
                            double density = 1.0) {
  Matrix m(p, rows, cols);
  std::uniform_int_distribution<std::uint32_t> value(0, p - 1);
  std::bernoulli_distribution keep(density);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m(r, c) = static_cast<Elem>(value(rng));
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, p, n, n);
    if (rank(m) == n) return m;
  }
}

inline std::vector<Elem> random_vector(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> value(0, p - 1);
  std::vector<Elem> v(n);
  for (auto& x : v) x = static_cast<Elem>(value(rng));
  return v;
}

}  // namespace eqss::testing
