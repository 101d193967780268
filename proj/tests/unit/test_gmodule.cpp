#include <random>
#include <stdexcept>

#include "doctest.h"
#include "eqss/gmodule.hpp"
#include "helpers.hpp"

using namespace eqss;

namespace {

Matrix cyclic_shift(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m((i + 1) % n, i) = 1;
  return m;
}

GModule random_conjugate(std::mt19937_64& rng, const GModule& m) {
  if (m.dim() == 0) return m;
  return m.conjugated(eqss::testing::random_invertible(rng, m.p(), m.dim()));
}

}  // namespace

TEST_CASE("decompose small modules") {
  CHECK(decompose(GModule::trivial(Field(5), 2)).multiplicities == std::map<std::size_t, std::size_t>{{1, 2}});
  CHECK(decompose(GModule(cyclic_shift(Field(3), 3))).multiplicities ==
        std::map<std::size_t, std::size_t>{{3, 1}});

  std::mt19937_64 rng(3);
  const Field f3(3);
  const auto m = GModule::direct_sum({GModule::indecomposable(f3, 2), GModule::indecomposable(f3, 1)});
  // (t - 1)^d has ranks 3, 1, 0
  CHECK(rank(m.augmentation()) == 1);
  CHECK(rank(m.augmentation().pow(2)) == 0);
  CHECK(decompose(random_conjugate(rng, m)).multiplicities == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}});
}

TEST_CASE("actions that are not of order p are rejected") {
  CHECK_THROWS_AS(GModule(Matrix::from_rows(Field(3), {{2}})), std::invalid_argument);
  CHECK_THROWS_AS(GModule(Matrix(Field(3), 2, 3)), std::invalid_argument);
}

TEST_CASE("random direct sums round-trip through decompose") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field f(p);
    for (int trial = 0; trial < 25; ++trial) {
      std::map<std::size_t, std::size_t> want;
      std::uniform_int_distribution<std::size_t> count(0, 2);
      for (std::size_t d = 1; d <= p; ++d)
        if (const auto c = count(rng)) want[d] = c;
      const auto m = random_conjugate(rng, GModule::from_multiplicities(f, want));
      const auto got = decompose(m);
      CHECK(got.multiplicities == want);
      CHECK(got.dim() == m.dim());
      // generator independence
      for (std::uint64_t a = 2; a < p; ++a) CHECK(decompose(m.with_generator_power(a)) == got);
    }
  }
}

TEST_CASE("group cohomology of indecomposables") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field f(p);
    for (std::size_t i = 1; i <= p; ++i) {
      const auto v = GModule::indecomposable(f, i);
      CHECK(group_cohomology(v, 0).dim == 1);
      for (unsigned k = 1; k <= 6; ++k) {
        CHECK(group_cohomology(v, k).dim == (i < p ? 1u : 0u));
        CHECK(group_cohomology(v, k).dim == group_cohomology(v, k + 2).dim);
      }
    }
  }
  CHECK(group_cohomology(GModule::trivial(Field(5), 1), 7).dim == 1);
  CHECK(group_cohomology(GModule::indecomposable(Field(3), 3), 2).dim == 0);
  CHECK(group_cohomology(GModule::indecomposable(Field(3), 2), 1).dim == 1);
}

TEST_CASE("niceness") {
  CHECK(is_nice(GModule::trivial(Field(7), 3)));
  CHECK_FALSE(is_nice(GModule::indecomposable(Field(5), 4)));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    std::uniform_int_distribution<std::size_t> count(0, 3);
    const auto m = GModule::from_multiplicities(Field(2), {{1, count(rng)}, {2, count(rng)}});
    CHECK(is_nice(random_conjugate(rng, m)));
  }
  // t^i = m_1 for nice modules
  const auto nice = GModule::from_multiplicities(Field(5), {{1, 3}, {5, 2}});
  CHECK(group_cohomology(nice, 2).dim == 3);
}

TEST_CASE("dual pairings") {
  const Field f3(3);
  const auto triv = GModule::trivial(f3, 2);
  CHECK(check_dual_pairing(triv, triv, Matrix::identity(f3, 2)));
  CHECK_FALSE(check_dual_pairing(triv, triv, Matrix(f3, 2, 2)));
  CHECK_THROWS(check_dual_pairing(triv, triv, Matrix(f3, 2, 3)));

  // evaluation pairing between V_3 and its dual (t acting by the inverse transpose)
  const auto v3 = GModule::indecomposable(f3, 3);
  Matrix inv(f3, 3, 3);
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<Elem> e(3, 0);
    e[c] = 1;
    const auto x = solve(v3.action(), e);
    REQUIRE(x.has_value());
    for (std::size_t r = 0; r < 3; ++r) inv(r, c) = (*x)[r];
  }
  const GModule dual(inv.transpose());
  CHECK(check_dual_pairing(v3, dual, Matrix::identity(f3, 3)));
  CHECK(decompose(v3) == decompose(dual));

  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto m = random_conjugate(rng, GModule::from_multiplicities(Field(5), {{2, 1}, {4, 1}}));
    const auto p = eqss::testing::random_matrix(rng, 5, m.dim(), m.dim());
    if (check_dual_pairing(m, m, p)) CHECK(decompose(m) == decompose(m));
  }
}

TEST_CASE("t-invariants and chi_t") {
  const Field f5(5);
  auto s3 = CohomologyProfile::from_modules(
      5, {GModule::trivial(f5, 1), GModule::trivial(f5, 0), GModule::trivial(f5, 0), GModule::trivial(f5, 1)});
  CHECK(chi_t(s3) == 0);
  CHECK(t_sum(s3) == 2);
  CHECK(t_tail(s3, 1) == 1);
  CHECK(s3.top_degree() == 3);

  const std::size_t b = 3;
  auto nice = CohomologyProfile::from_modules(
      5, {GModule::trivial(f5, 1), GModule::from_multiplicities(f5, {{1, b}, {5, 1}}),
          GModule::from_multiplicities(f5, {{1, b}, {5, 1}}), GModule::trivial(f5, 1)});
  CHECK(t_sum(nice) == 2 + 2 * b);
  CHECK(nice.nice());

  auto empty = CohomologyProfile::from_modules(5, {});
  CHECK(chi_t(empty) == 0);
  CHECK(empty.top_degree() == -1);
}

TEST_CASE("module and profile JSON round-trip") {
  std::mt19937_64 rng(4);
  const auto m = random_conjugate(rng, GModule::from_multiplicities(Field(7), {{3, 1}, {1, 2}}));
  const auto back = gmodule_from_json(to_json(m));
  CHECK(back.action() == m.action());

  const auto profile = CohomologyProfile::from_modules(3, {GModule::trivial(Field(3), 1), m.p() == 3 ? m : GModule::indecomposable(Field(3), 2)});
  const auto again = profile_from_json(to_json(profile));
  CHECK(again.t == profile.t);
  CHECK(again.decompositions == profile.decompositions);

  nlohmann::json j = {{"p", 3}, {"degrees", {{{"decomposition", {{"1", 1}}}}, {{"decomposition", {{"2", 1}}}}}}};
  const auto parsed = profile_from_json(j);
  CHECK(parsed.betti(1) == 2);
  CHECK_FALSE(parsed.nice());
}
