#include <random>

#include "doctest.h"
#include "eqss/builders.hpp"
#include "eqss/complex.hpp"
#include "helpers.hpp"

using namespace eqss;

namespace {

std::vector<std::size_t> betti(const SimplicialGComplex& k) {
  const CochainComplex c(CellComplex::from_simplicial(k));
  std::vector<std::size_t> out;
  for (const auto& b : cohomology_bases(c)) out.push_back(b.representatives.cols());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::size_t> betti(const CellComplex& k) {
  const CochainComplex c(k);
  std::vector<std::size_t> out;
  for (const auto& b : cohomology_bases(c)) out.push_back(b.representatives.cols());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<SimplicialGComplex> small_corpus() {
  return {build_point(3),           build_circle(3),           build_circle(2),
          build_trivial_circle(3),  build_suspension_sphere(3), build_suspension_sphere(5),
          build_cone(3),            build_sphere_join(3, 1, 0), build_sphere_join(2, 1, 0)};
}

}  // namespace

TEST_CASE("regularization") {
  const auto tri = build_circle(3);
  CHECK_FALSE(tri.order_compatible());
  const auto sd = validate_and_regularize(tri);
  CHECK(sd.order_compatible());
  CHECK(sd.regular());
  CHECK(sd.count(0) == 6);

  const auto triv = build_trivial_circle(5);
  const auto same = validate_and_regularize(triv);
  CHECK(same.count(0) == triv.count(0));
  CHECK(same.count(1) == triv.count(1));

  const auto join = validate_and_regularize(build_sphere_join(5, 1, 0));
  const auto fixed = fixed_subcomplex(join);
  CHECK(fixed.euler_characteristic() == 0);
  CHECK(betti(fixed) == std::vector<std::size_t>{1, 1});
  CHECK(fixed.trivial_action());

  CHECK_THROWS_AS(build_sphere_join(3, 0, 0), std::invalid_argument);
}

TEST_CASE("cochain complexes and cohomology modules") {
  const CochainComplex point(CellComplex::from_simplicial(build_point(3)));
  CHECK(point.top_degree() == 0);
  CHECK(point.dim(0) == 1);
  CHECK(point.coboundary(0).rows() == 0);

  const auto circle = validate_and_regularize(build_circle(3));
  const CochainComplex cc(CellComplex::from_simplicial(circle));
  CHECK(cc.dim(0) == cc.dim(1));

  const auto sphere = CochainComplex(CellComplex::from_simplicial(validate_and_regularize(build_suspension_sphere(3))));
  const auto prof = cohomology_gmodules(sphere);
  CHECK(prof.betti(0) == 1);
  CHECK(prof.betti(1) == 0);
  CHECK(prof.betti(2) == 1);
  CHECK(prof.decompositions[2].count(1) == 1);

  const auto cone = CochainComplex(CellComplex::from_simplicial(validate_and_regularize(build_cone(5))));
  const auto cp = cohomology_gmodules(cone);
  CHECK(cp.top_degree() == 0);

  const auto free_s3 = CochainComplex(CellComplex::from_simplicial(validate_and_regularize(build_sphere_join(3, 1, 1))));
  const auto fp = cohomology_gmodules(free_s3);
  CHECK(fp.betti(0) == 1);
  CHECK(fp.betti(1) == 0);
  CHECK(fp.betti(2) == 0);
  CHECK(fp.betti(3) == 1);
  CHECK(fp.decompositions[3].count(1) == 1);

  for (const auto& k : small_corpus()) {
    const CochainComplex c(CellComplex::from_simplicial(validate_and_regularize(k)));
    CHECK_NOTHROW(c.verify());
  }
}

TEST_CASE("empty complex flows through") {
  const SimplicialGComplex empty(3, 0, {}, {});
  CHECK(empty.dimension() == -1);
  const CochainComplex c(CellComplex::from_simplicial(empty));
  CHECK(c.top_degree() == -1);
  CHECK(cohomology_gmodules(c).top_degree() == -1);
}

TEST_CASE("cup product: unit, Leibniz, equivariance") {
  std::mt19937_64 rng(21);
  for (const auto& raw : small_corpus()) {
    const CochainComplex c(CellComplex::from_simplicial(validate_and_regularize(raw)));
    const Field& f = c.field();
    const int top = c.top_degree();
    for (int l = 0; l <= top; ++l) {
      const auto a = eqss::testing::random_vector(rng, c.p(), c.dim(l));
      CHECK(c.cup(0, c.unit(), l, a) == a);
      CHECK(c.cup(l, a, 0, c.unit()) == a);
    }
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<int> deg(0, top);
      const int l = deg(rng), l2 = deg(rng);
      const auto a = eqss::testing::random_vector(rng, c.p(), c.dim(l));
      const auto b = eqss::testing::random_vector(rng, c.p(), c.dim(l2));
      const auto ab = c.cup(l, a, l2, b);
      CHECK(c.act(l + l2, ab) == c.cup(l, c.act(l, a), l2, c.act(l2, b)));
      if (l + l2 + 1 <= top) {
        auto rhs = c.cup(l + 1, c.apply_coboundary(l, a), l2, b);
        const auto second = c.cup(l, a, l2 + 1, c.apply_coboundary(l2, b));
        const Elem sg = f.sign(l);
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = f.add(rhs[i], f.mul(sg, second[i]));
        CHECK(c.apply_coboundary(l + l2, ab) == rhs);
      }
    }
  }
  const CochainComplex circle(CellComplex::from_simplicial(validate_and_regularize(build_circle(3))));
  const auto bases = cohomology_bases(circle);
  const auto gen = bases[1].representatives.column(0);
  const auto sq = circle.cup(1, gen, 1, gen);
  CHECK(std::all_of(sq.begin(), sq.end(), [](Elem e) { return e == 0; }));
}

TEST_CASE("fixed set, quotient and the Euler characteristic formula") {
  for (const auto& raw : small_corpus()) {
    const auto k = validate_and_regularize(raw);
    const long long chi = k.euler_characteristic();
    const long long chi_fixed = fixed_subcomplex(k).euler_characteristic();
    const long long chi_quot = quotient_complex(k).euler_characteristic();
    CHECK(chi - chi_fixed == static_cast<long long>(k.p()) * (chi_quot - chi_fixed));
  }
  const auto circle = validate_and_regularize(build_circle(5));
  CHECK(fixed_subcomplex(circle).dimension() == -1);
  CHECK(betti(quotient_complex(circle)) == std::vector<std::size_t>{1, 1});

  const auto lens = quotient_complex(validate_and_regularize(build_sphere_join(3, 1, 1)));
  CHECK(betti(lens) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("Poincare duality of the join model") {
  const CochainComplex c(CellComplex::from_simplicial(validate_and_regularize(build_sphere_join(3, 1, 0))));
  const auto check = check_poincare_duality(c, cohomology_bases(c));
  CHECK(check.holds);
  CHECK(check.n == 3);
  // H^0 and H^3 pair to the fundamental class
  CHECK(check.pairing_ranks.front() == 1);
}

TEST_CASE("JSON input errors carry positions") {
  const std::string bad_face = R"({
  "p": 3,
  "vertices": 3,
  "generator": [0, 1, 2],
  "simplices": [
    [0, 1],
    [0, 1, 2]
  ]
})";
  try {
    complex_from_json(bad_face);
    FAIL("expected an InputError");
  } catch (const InputError& e) {
    CHECK(e.line() == 7);
    CHECK(e.item() == 1);
  }
  try {
    complex_from_json("{\"p\": 3,\n \"vertices\": 2,,}");
    FAIL("expected an InputError");
  } catch (const InputError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(complex_from_json(R"({"p": 4, "vertices": 1, "generator": [0], "simplices": []})"), std::exception);
  CHECK_THROWS_AS(complex_from_json(R"({"p": 3, "vertices": 2, "generator": [1, 0], "simplices": []})"), InputError);

  const auto k = build_suspension_sphere(3);
  const auto again = complex_from_json(to_json(k).dump());
  CHECK(again.cell_count() == k.cell_count());
  CHECK(again.generator() == k.generator());
}
