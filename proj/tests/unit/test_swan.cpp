#include <random>

#include "doctest.h"
#include "eqss/builders.hpp"
#include "eqss/checks.hpp"
#include "eqss/swan.hpp"
#include "helpers.hpp"

using namespace eqss;

namespace {

CochainComplex cochains(const SimplicialGComplex& k) {
  return CochainComplex(CellComplex::from_simplicial(validate_and_regularize(k)));
}

std::vector<std::size_t> dims_from(std::initializer_list<std::size_t> head, std::size_t tail, std::size_t count) {
  std::vector<std::size_t> out(head);
  while (out.size() < count) out.push_back(tail);
  return out;
}

}  // namespace

TEST_CASE("window limits") {
  const auto c = cochains(build_point(3));
  CHECK_THROWS_AS(SwanDoubleComplex(c, 15), std::invalid_argument);
  CHECK_NOTHROW(SwanDoubleComplex(c, 16));
  CHECK(SwanDoubleComplex::default_window(3) == 22);
}

TEST_CASE("total cohomology of small models") {
  SUBCASE("point is BZ/p") {
    const SwanDoubleComplex dc(cochains(build_point(3)), 20);
    dc.verify();
    CHECK(dc.horizontal_matrix(1, 0).is_zero());  // N = 3 = 0
    CHECK(dc.horizontal_matrix(0, 0).is_zero());
    CHECK(total_cohomology_dims(dc) == std::vector<std::size_t>(19, 1));
  }
  SUBCASE("free circle") {
    const SwanDoubleComplex dc(cochains(build_circle(3)), 18);
    dc.verify();
    CHECK(total_cohomology_dims(dc) == dims_from({1, 1}, 0, 17));
  }
  SUBCASE("trivial circle") {
    const SwanDoubleComplex dc(cochains(build_trivial_circle(3)), 18);
    const auto dims = total_cohomology_dims(dc);
    CHECK(dims == dims_from({1}, 2, 17));
    CHECK(dims == kunneth_dims({1, 1}, 17));
  }
  SUBCASE("suspension sphere localizes to its poles") {
    const auto k = validate_and_regularize(build_suspension_sphere(5));
    const SwanDoubleComplex dc(CochainComplex(CellComplex::from_simplicial(k)), 20);
    const SwanDoubleComplex fixed(CochainComplex(CellComplex::from_simplicial(fixed_subcomplex(k))), 20);
    CHECK(check_localization(total_cohomology_dims(dc), total_cohomology_dims(fixed), 2).ok());
    CHECK(total_cohomology_dims(fixed) == kunneth_dims({2}, 19));
  }
}

TEST_CASE("Swan product") {
  SUBCASE("unit") {
    const auto c = cochains(build_suspension_sphere(3));
    const SwanDoubleComplex dc(c, 20);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l <= 2; ++l) {
        const auto a = eqss::testing::random_vector(rng, 3, c.dim(l));
        CHECK(dc.product(0, 0, c.unit(), k, l, a) == a);
      }
  }
  SUBCASE("odd columns on a point vanish since p choose 2 = 0 mod p") {
    for (std::uint32_t p : {3u, 5u}) {
      const SwanDoubleComplex dc(cochains(build_point(p)), 16);
      CHECK(dc.product(1, 0, {1}, 3, 0, {1}) == std::vector<Elem>{0});
    }
    // p = 2: the single term t^0 a u t^1 b survives
    const SwanDoubleComplex dc2(cochains(build_point(2)), 16);
    CHECK(dc2.product(1, 0, {1}, 1, 0, {1}) == std::vector<Elem>{1});
  }
  SUBCASE("window overflow") {
    const SwanDoubleComplex dc(cochains(build_point(3)), 16);
    CHECK(dc.product(10, 0, {1}, 10, 0, {1}).empty());
  }
  SUBCASE("Leibniz on random cochains") {
    for (const auto& k : {build_circle(3), build_suspension_sphere(3), build_cone(5), build_circle(2),
                          build_sphere_join(2, 1, 0)}) {
      const SwanDoubleComplex dc(cochains(k), SwanDoubleComplex::default_window(k.dimension()));
      const auto res = check_swan_leibniz(dc, 200, 7);
      CHECK(res.ok());
      if (!res.ok()) MESSAGE(res.failures.front());
    }
  }
}
