#include <random>

#include "doctest.h"
#include "eqss/builders.hpp"
#include "eqss/checks.hpp"
#include "eqss/spectral.hpp"

using namespace eqss;

namespace {

struct Pipeline {
  CochainComplex cochains;
  SwanDoubleComplex dc;
  SpectralSequence ss;

  explicit Pipeline(const SimplicialGComplex& k)
      : cochains(CellComplex::from_simplicial(validate_and_regularize(k))),
        dc(cochains, SwanDoubleComplex::default_window(std::max(cochains.top_degree(), 0))),
        ss(dc) {}
};

void require_ok(const CheckResult& r) {
  if (!r.ok()) MESSAGE(r.failures.front());
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("pages agree with the dense subquotient") {
  for (const auto& k : {build_point(3), build_circle(3), build_trivial_circle(3), build_suspension_sphere(3),
                        build_cone(3), build_circle(2)}) {
    const Pipeline pl(k);
    for (int r = 1; r <= pl.ss.final_page(); ++r)
      for (int kk = 0; kk <= pl.ss.trusted_column(r); ++kk)
        for (int l = 0; l <= pl.ss.n(); ++l) CHECK(pl.ss.dim(r, kk, l) == reference_page_dim(pl.dc, r, kk, l));
  }
}

TEST_CASE("known pages") {
  SUBCASE("point") {
    const Pipeline pl(build_point(5));
    for (int k = 0; k < 10; ++k) CHECK(pl.ss.dim(2, k, 0) == 1);
    CHECK(check_zr(pl.ss));
    CHECK(check_condition_cond(pl.ss));
  }
  SUBCASE("free circle: d_2 is an isomorphism from row 1 to row 0") {
    const Pipeline pl(build_circle(3));
    for (int k = 0; k < 6; ++k) {
      CHECK(pl.ss.dim(2, k, 0) == 1);
      CHECK(pl.ss.dim(2, k, 1) == 1);
      CHECK(rank(pl.ss.differential(2, k, 1)) == 1);
    }
    CHECK_FALSE(check_zr(pl.ss));
  }
}

TEST_CASE("structural checks on small complexes") {
  for (const auto& k : {build_point(3), build_circle(3), build_suspension_sphere(3), build_cone(5),
                        build_trivial_circle(5), build_circle(2)}) {
    const Pipeline pl(k);
    require_ok(check_e2_identification(pl.ss, cohomology_gmodules(pl.cochains)));
    require_ok(check_convergence(pl.ss, total_cohomology_dims(pl.dc)));
    require_ok(check_page_structure(pl.ss));
    require_ok(check_euler_invariance(pl.ss));
  }
}

TEST_CASE("classes: lift, project and denominators") {
  const Pipeline pl(build_suspension_sphere(3));
  const Field f(3);
  std::mt19937_64 rng(4);
  for (int r = 1; r <= pl.ss.final_page(); ++r)
    for (int k = 0; k <= 5; ++k)
      for (int l = 0; l <= 2; ++l) {
        const std::size_t d = pl.ss.dim(r, k, l);
        for (std::size_t i = 0; i < d; ++i) {
          std::vector<Elem> e(d, 0);
          e[i] = 1;
          auto z = pl.ss.lift(r, k, l, e);
          CHECK(pl.ss.project(r, k, l, z) == e);
          for (const auto c : pl.ss.denominator_cells(r, k, l)) {
            const auto w = pl.ss.basis_vector(k + l, c);
            for (std::size_t j = 0; j < z.size(); ++j) z[j] = f.add(z[j], w[j]);
          }
          CHECK(pl.ss.project(r, k, l, z) == e);
        }
      }
  // A cochain outside the filtration is rejected.
  std::vector<Elem> bad(pl.dc.tot_dim(2), 0);
  REQUIRE_FALSE(bad.empty());
  bad.back() = 1;
  CHECK_THROWS_AS(pl.ss.project(2, 2, 0, bad), std::logic_error);
}

TEST_CASE("product laws on pages") {
  for (const auto& k : {build_point(3), build_circle(3), build_suspension_sphere(3), build_trivial_circle(3)}) {
    const Pipeline pl(k);
    const bool nice = cohomology_gmodules(pl.cochains).nice();
    for (int r = 2; r <= pl.ss.final_page(); ++r) {
      ProductCheckOptions opt;
      opt.page = r;
      opt.samples = 60;
      opt.seed = static_cast<std::uint64_t>(r);
      opt.odd_odd_vanishing = nice && k.p() != 2;
      require_ok(check_product_laws(pl.ss, opt));
    }
  }
}
