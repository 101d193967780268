#include <random>
#include <stdexcept>

#include "doctest.h"
#include "eqss/matrix.hpp"
#include "helpers.hpp"

using namespace eqss;
using eqss::testing::random_matrix;

TEST_CASE("field construction rejects composites and large primes") {
  CHECK_THROWS_AS(Field(4), std::invalid_argument);
  CHECK_THROWS_AS(Field(1), std::invalid_argument);
  CHECK_THROWS_AS(Field(257), std::invalid_argument);
  Field f(251);
  CHECK(f.mul(f.inv(17), 17) == 1);
  CHECK(f.from_int(-1) == 250);
}

TEST_CASE("rref on small examples") {
  SUBCASE("empty") {
    const auto e = rref(Matrix(3, 0, 0));
    CHECK(e.rank() == 0);
    CHECK(e.pivots.empty());
  }
  SUBCASE("identity over F_5") {
    const Matrix id = Matrix::identity(Field(5), 3);
    const auto e = rref(id);
    CHECK(e.reduced == id);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("singular 2x2 over F_3") {
    // det = 1 - 4 = -3 = 0 mod 3
    const Matrix a = Matrix::from_rows(Field(3), {{1, 2}, {2, 1}});
    CHECK(rank(a) == 1);
    CHECK(rref(a).rank() == 1);
  }
}

TEST_CASE("kernel, image, subquotient") {
  const Field f3(3);
  CHECK(kernel_basis(Matrix(f3, 1, 2)).cols() == 2);

  Matrix z(f3, 3, 2);
  z(0, 0) = 1;
  z(1, 1) = 1;
  Matrix b(f3, 3, 1);
  b(0, 0) = 1;
  CHECK(subquotient_dim(z, b) == 1);
  Matrix outside(f3, 3, 1);
  outside(2, 0) = 1;
  CHECK_THROWS_AS(subquotient_dim(z, outside), std::invalid_argument);

  // cyclic shift minus identity on F_3^3
  Matrix shift(f3, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) shift((i + 1) % 3, i) = 1;
  CHECK(image_basis(shift - Matrix::identity(f3, 3)).cols() == 2);
}

TEST_CASE("random properties of rank, rref, solve and canonical bases") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<std::size_t> size(0, 9);
      const Matrix a = random_matrix(rng, p, size(rng), size(rng), 0.5);
      CHECK(rank(a) == rank(a.transpose()));
      CHECK(rank(a) <= std::min(a.rows(), a.cols()));
      const auto e = rref(a);
      CHECK(rref(e.reduced).reduced == e.reduced);
      CHECK(e.rank() + kernel_basis(a).cols() == a.cols());
      CHECK((a * kernel_basis(a)).is_zero());

      const auto b = eqss::testing::random_vector(rng, p, a.rows());
      const auto x = solve(a, b);
      Matrix bm(p, a.rows(), 1);
      for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
      CHECK(x.has_value() == span_contains(image_basis(a), bm));
      if (x) CHECK(a.apply(*x) == b);

      // two random bases of the same subspace
      if (a.cols() > 0 && a.rows() > 0) {
        const Matrix basis = image_basis(a);
        const Matrix mixed = basis * eqss::testing::random_invertible(rng, p, basis.cols());
        CHECK(canonical_basis(mixed) == basis);
      }
    }
  }
}

TEST_CASE("parallel and serial elimination agree bit for bit") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 251u}) {
    const Matrix a = random_matrix(rng, p, 120, 90, 0.3);
    const auto par = rref(a);
    const auto ser = rref_serial(a);
    CHECK(par.reduced == ser.reduced);
    CHECK(par.pivots == ser.pivots);
  }
}

TEST_CASE("lazy reduction survives long eliminations at p = 251") {
  // More pivots than the lazy budget allows between reductions.
  std::mt19937_64 rng(9);
  const Matrix a = random_matrix(rng, 251, 300, 300);
  const auto e = rref(a);
  CHECK(e.rank() == rank(a));
  CHECK((a * kernel_basis(a)).is_zero());
}
