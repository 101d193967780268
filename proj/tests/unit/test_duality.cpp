#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "eqss/builders.hpp"
#include "eqss/checks.hpp"
#include "eqss/duality.hpp"
#include "eqss/io.hpp"
#include "eqss/theorems.hpp"

using namespace eqss;
using nlohmann::json;

namespace {

std::string cell(int k, int l) { return std::to_string(k) + "," + std::to_string(l); }
std::string pair_key(int k, int l, int k2, int l2) {
  return "(" + cell(k, l) + ")x(" + cell(k2, l2) + ")";
}

// A page that looks like E_2 of a trivial action on a space with cohomology
// F_p in degrees 0 and n: every cell one-dimensional, all products 1.
json sphere_like_page(int n, int window, std::uint32_t p = 3) {
  json j = {{"field_char", p}, {"n", n}, {"window", window}, {"r", 2}};
  for (int k = 0; k <= window; ++k)
    for (int l : {0, n}) j["dims"][cell(k, l)] = 1;
  for (int k = 0; k <= window; ++k)
    for (int k2 = 0; k + k2 <= window; ++k2)
      for (int l : {0, n})
        for (int l2 : {0, n})
          if (l + l2 <= n) j["products"][pair_key(k, l, k2, l2)] = json::array({json::array({json::array({1})})});
  return j;
}

json random_page(std::mt19937_64& rng, int n, int window, std::uint32_t p) {
  json j = {{"field_char", p}, {"n", n}, {"window", window}, {"r", 2}};
  std::uniform_int_distribution<int> dim(0, 2), entry(0, static_cast<int>(p) - 1);
  std::bernoulli_distribution top_one(0.8);
  std::vector<std::vector<int>> d(window + 1, std::vector<int>(n + 1));
  for (int k = 0; k <= window; ++k)
    for (int l = 0; l <= n; ++l) {
      d[k][l] = l == n || l == 0 ? (top_one(rng) ? 1 : dim(rng)) : dim(rng);
      j["dims"][cell(k, l)] = d[k][l];
    }
  j["products"] = json::object();
  for (int k = 0; k <= window; ++k)
    for (int k2 = 0; k + k2 <= window; ++k2)
      for (int l = 0; l <= n; ++l)
        for (int l2 = 0; l + l2 <= n; ++l2) {
          const int t = d[k + k2][l + l2];
          json mats = json::array();
          for (int m = 0; m < t; ++m) {
            json rows = json::array();
            for (int a = 0; a < d[k][l]; ++a) {
              json row = json::array();
              for (int b = 0; b < d[k2][l2]; ++b) row.push_back(entry(rng));
              rows.push_back(row);
            }
            mats.push_back(rows);
          }
          j["products"][pair_key(k, l, k2, l2)] = mats;
        }
  return j;
}

}  // namespace

TEST_CASE("synthetic page parsing") {
  SUBCASE("round trip of a small page") {
    const SyntheticPage page = SyntheticPage::from_json(sphere_like_page(2, 4));
    CHECK(page.page() == 2);
    CHECK(page.n() == 2);
    CHECK(page.k_limit() == 4);
    CHECK(page.dim(3, 2) == 1);
    CHECK(page.dim(3, 1) == 0);
    CHECK(page.differential(0, 2).cols() == 1);
    CHECK(page.differential(0, 2).rows() == 0);
    CHECK(page.differential(0, 2).is_zero());
    REQUIRE(page.product(1, 0, 2, 2));
    CHECK(page.product(1, 0, 2, 2)->front().rank() == 1);
  }
  SUBCASE("rational entries") {
    json j = {{"field_char", 0}, {"n", 0}, {"window", 1}, {"dims", {{"0,0", 2}, {"1,0", 2}}}};
    j["differentials"]["1"]["0,0"] = json::array({json::array({"1/2", "-3"}), json::array({"1", "-6"})});
    const SyntheticPage page = SyntheticPage::from_json(j);
    CHECK(page.page() == 1);
    CHECK(page.differential(0, 0).rank() == 1);
  }
  SUBCASE("errors") {
    json bad_shape = {{"field_char", 3}, {"n", 0}, {"window", 2}, {"r", 2}, {"dims", {{"0,0", 1}, {"2,0", 2}}}};
    bad_shape["differentials"]["2"]["0,0"] = json::array({json::array({1})});
    CHECK_THROWS_AS(SyntheticPage::from_json(bad_shape), InputError);
    CHECK_THROWS_AS(SyntheticPage::from_json(json{{"n", 1}, {"window", 3}}), InputError);
    CHECK_THROWS_AS(SyntheticPage::from_json(json{{"field_char", 4}, {"n", 1}, {"window", 3}}), InputError);
    json bad_key = sphere_like_page(1, 2);
    bad_key["dims"]["one,two"] = 1;
    CHECK_THROWS_AS(SyntheticPage::from_json(bad_key), InputError);
    CHECK_THROWS_AS(parse_rational(json("1/0")), InputError);
    CHECK_THROWS_AS(parse_variant("spd"), InputError);
  }
  SUBCASE("several pages must be consecutive") {
    json a = sphere_like_page(1, 3), b = sphere_like_page(1, 3);
    b["r"] = 4;
    CHECK_THROWS_AS(synthetic_pages_from_json(json{{"pages", {a, b}}}), InputError);
    b["r"] = 3;
    CHECK(synthetic_pages_from_json(json{{"pages", {a, b}}}).size() == 2);
  }
}

TEST_CASE("pairing non-degeneracy") {
  json j = sphere_like_page(1, 6);
  SUBCASE("0 x 0 pairings are vacuously non-degenerate") {
    const SyntheticPage page = SyntheticPage::from_json(j);
    CHECK_FALSE(pairing_violation(page, 2, 2, 3, -1));
  }
  SUBCASE("rectangular pairing") {
    j["dims"]["2,0"] = 2;
    j["products"] = json::object();
    const SyntheticPage page = SyntheticPage::from_json(j);
    const auto v = pairing_violation(page, 2, 0, 3, 1);
    REQUIRE(v);
    CHECK(v->rows == 2);
    CHECK(v->cols == 1);
  }
  SUBCASE("a degenerate pairing is listed with its coordinates") {
    j = sphere_like_page(1, 8);
    j["products"][pair_key(2, 0, 3, 1)] = json::array({json::array({json::array({0})})});
    const SyntheticPage page = SyntheticPage::from_json(j);
    const DualityFlag f = check_duality_at(page, DualityVariant::kWPD, 1, 0);
    CHECK_FALSE(f.holds);
    const bool listed = std::any_of(f.violations.begin(), f.violations.end(), [](const PairingViolation& v) {
      return v.k == 2 && v.l == 0 && v.k2 == 3 && v.l2 == 1 && v.rank == 0;
    });
    CHECK(listed);
    // A larger threshold avoids the defect.
    CHECK(check_duality(page, DualityVariant::kWPD, 1).holds);
    CHECK(*check_duality(page, DualityVariant::kWPD, 1).threshold == 2);
  }
  SUBCASE("a defect in every column cannot be avoided") {
    for (int k = 0; k <= 6; k += 2)
      for (int k2 = 1; k + k2 <= 6; k2 += 2)
        j["products"][pair_key(k, 0, k2, 1)] = json::array({json::array({json::array({0})})});
    const SyntheticPage page = SyntheticPage::from_json(j);
    const DualityFlag f = check_duality(page, DualityVariant::kWPD, 1);
    CHECK_FALSE(f.holds);
    CHECK_FALSE(f.violations.empty());
  }
  SUBCASE("missing product data is a violation, not a pass") {
    j.erase("products");
    const SyntheticPage page = SyntheticPage::from_json(j);
    CHECK_FALSE(check_duality(page, DualityVariant::kWPD, 1).holds);
  }
}

TEST_CASE("variant implications on random pages") {
  std::mt19937_64 rng(11);
  std::size_t sspd_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 3;
    const SyntheticPage page = SyntheticPage::from_json(random_page(rng, n, 6, trial % 2 ? 3 : 5));
    for (int N = 0; N <= 5; ++N) {
      const DualityFlag s = check_duality_at(page, DualityVariant::kSSPD, n, N);
      if (!s.holds) continue;
      ++sspd_seen;
      CHECK(check_duality_at(page, DualityVariant::kWPD, n, N).holds);
      for (int k = N + 1; k <= 6; ++k)
        for (int k2 = N + 1; k + k2 <= 6; ++k2)
          if (k % 2 == 0 && k2 % 2 == 0)
            for (int l = 0; l <= n; ++l) CHECK_FALSE(pairing_violation(page, k, l, k2, n - l));
    }
    const DualityFlag w = check_duality(page, DualityVariant::kWPD, n);
    if (w.holds && *w.threshold > 0) {
      const DualityFlag below = check_duality_at(page, DualityVariant::kWPD, n, *w.threshold - 1);
      CHECK((!below.holds || below.pairings_checked == 0));
    }
    CHECK_NOTHROW(duality_report({&page}, n));
  }
  CHECK(sspd_seen > 0);
}

TEST_CASE("pd on a page with vanishing odd columns") {
  json j = {{"field_char", 3}, {"n", 2}, {"window", 8}, {"r", 2}};
  for (int k = 0; k <= 8; k += 2)
    for (int l : {0, 1, 2}) j["dims"][cell(k, l)] = 1;
  for (int k = 0; k <= 8; k += 2)
    for (int k2 = 0; k + k2 <= 8; k2 += 2)
      for (int l = 0; l <= 2; ++l)
        for (int l2 = 0; l + l2 <= 2; ++l2) {
          const int v = l == 1 && l2 == 1 ? 2 : 1;
          j["products"][pair_key(k, l, k2, l2)] = json::array({json::array({json::array({v})})});
        }
  const SyntheticPage page = SyntheticPage::from_json(j);
  const DualityFlag f = check_duality(page, DualityVariant::kPD, 2);
  CHECK(f.holds);
  CHECK(*f.threshold == 0);
}

TEST_CASE("mod 4 audit rejects an even-n page with a symmetric odd-rank middle form") {
  // n = 2: the middle form on E^{k,1} must be skew, hence of even rank.
  json j = sphere_like_page(2, 8);
  for (int k = 0; k <= 8; ++k) j["dims"][cell(k, 1)] = 1;
  for (int k = 0; k <= 8; ++k)
    for (int k2 = 0; k + k2 <= 8; ++k2) {
      j["products"][pair_key(k, 1, k2, 1)] = json::array({json::array({json::array({1})})});
      j["products"][pair_key(k, 0, k2, 1)] = json::array({json::array({json::array({1})})});
      j["products"][pair_key(k, 1, k2, 0)] = json::array({json::array({json::array({1})})});
      j["products"][pair_key(k, 1, k2, 1)] = json::array({json::array({json::array({1})})});
    }
  const SyntheticPage page = SyntheticPage::from_json(j);
  const std::vector<const PageView*> pages{&page};
  const auto flags = duality_report(pages, 2);
  const Mod4Audit a = mod4_audit(pages, flags, 2);
  CHECK(a.skew_checks > 0);
  const bool rejected = !a.verdict.hypotheses_hold() || !a.failures.empty();
  CHECK(rejected);
  CHECK(a.verdict.verdict != Verdict::kPass);
  CHECK_FALSE(a.failures.empty());
}

namespace {

struct Pipeline {
  CochainComplex cochains;
  SwanDoubleComplex dc;
  SpectralSequence ss;
  std::vector<std::unique_ptr<SpectralPageView>> views;
  std::vector<const PageView*> pages;

  explicit Pipeline(const SimplicialGComplex& k)
      : cochains(CellComplex::from_simplicial(validate_and_regularize(k))),
        dc(cochains, SwanDoubleComplex::default_window(std::max(cochains.top_degree(), 0))),
        ss(dc) {
    for (int r = 2; r <= std::max(5, ss.final_page()); ++r) {
      views.push_back(std::make_unique<SpectralPageView>(ss, r));
      pages.push_back(views.back().get());
    }
  }
};

}  // namespace

TEST_CASE("duality on computed pages") {
  SUBCASE("semifree S^3, p = 5") {
    const Pipeline pl(build_sphere_join(5, 1, 0));
    const auto flags = duality_report(pl.pages, 3);
    for (const auto& f : flags) {
      CHECK(f.wpd.holds);
      CHECK(f.sspd.holds);
    }
    const AuditReport prop = pd_propagation_audit(pl.pages, flags, 3, check_zr(pl.ss));
    CHECK(prop.applicable);
    CHECK(prop.applications > 0);
    CHECK(prop.ok());
    const AuditReport ranks = rank_symmetry_audit(pl.pages, flags, 3);
    CHECK(ranks.applications > 0);
    CHECK(ranks.ok());
    const Mod4Audit m = mod4_audit(pl.pages, flags, 3);
    CHECK(m.verdict.lhs == 2);
    CHECK(m.verdict.rhs == 2);
    CHECK(m.verdict.verdict == Verdict::kPass);
  }
  SUBCASE("point: everything vacuous or trivially true") {
    const Pipeline pl(build_point(3));
    const auto flags = duality_report(pl.pages, 0);
    CHECK(pd_propagation_audit(pl.pages, flags, 0, true).ok());
    const Mod4Audit m = mod4_audit(pl.pages, flags, 0);
    CHECK(m.verdict.lhs == 1);
    CHECK(m.verdict.rhs == 1);
  }
  SUBCASE("free action: propagation hypothesis fails") {
    const Pipeline pl(build_circle(3));
    const auto flags = duality_report(pl.pages, 1);
    const AuditReport prop = pd_propagation_audit(pl.pages, flags, 1, check_zr(pl.ss));
    CHECK_FALSE(prop.applicable);
    CHECK(mod4_audit(pl.pages, flags, 1).verdict.verdict == Verdict::kNotApplicable);
  }
  SUBCASE("torus with a non-nice rotation: wpd still holds") {
    const Pipeline pl(build_torus_rotation());
    const auto flags = duality_report(pl.pages, 2);
    for (const auto& f : flags) CHECK(f.wpd.holds);
    CHECK(pd_propagation_audit(pl.pages, flags, 2, check_zr(pl.ss)).ok());
    const Mod4Audit m = mod4_audit(pl.pages, flags, 2);
    CHECK(m.failures.empty());
    CHECK(m.skew_checks > 0);
  }
}

namespace {

ZpActionData zp_data(const CohomologyProfile& m, const std::vector<std::size_t>& fixed, int n) {
  ZpActionData d;
  d.manifold = m;
  std::vector<GModule> mods;
  for (std::size_t b : fixed) mods.push_back(GModule::trivial(Field(m.p), b));
  d.fixed = CohomologyProfile::from_modules(m.p, std::move(mods));
  d.n = n;
  return d;
}

CohomologyProfile trivial_profile(std::uint32_t p, const std::vector<std::size_t>& betti) {
  std::vector<GModule> mods;
  for (std::size_t b : betti) mods.push_back(GModule::trivial(Field(p), b));
  return CohomologyProfile::from_modules(p, std::move(mods));
}

}  // namespace

TEST_CASE("theorem validators") {
  SUBCASE("M_p is not nice, so Zp does not apply") {
    for (std::uint32_t p : {3u, 5u}) {
      const auto d = zp_data(build_mp_profile(p), {1, 1}, 3);
      CHECK(verify_theorem_zp(d).verdict == Verdict::kNotApplicable);
      CHECK(verify_theorem_zp_fp(d).verdict == Verdict::kNotApplicable);
      CHECK(verify_sokolov(d, 1).verdict == Verdict::kNotApplicable);
    }
    CHECK(build_mp_profile(2).nice());
    CHECK(verify_theorem_zp(zp_data(build_mp_profile(2), {1, 1}, 3)).verdict == Verdict::kNotApplicable);
  }
  SUBCASE("semifree S^3 data") {
    const auto d = zp_data(trivial_profile(5, {1, 0, 0, 1}), {1, 1}, 3);
    const auto v = verify_theorem_zp(d);
    CHECK(v.verdict == Verdict::kPass);
    CHECK(v.lhs == 2);
    CHECK(v.rhs == 2);
    CHECK(verify_chi_t(d).verdict == Verdict::kPass);
    CHECK(verify_t_inequality(d, 0).verdict == Verdict::kPass);
    CHECK(verify_sokolov(d, 1).verdict == Verdict::kPass);
  }
  SUBCASE("Zp-cond with an empty fixed set") {
    const auto d = zp_data(trivial_profile(3, {1, 0, 0, 1}), {}, 3);
    CHECK(verify_theorem_zp(d).verdict == Verdict::kNotApplicable);
    CHECK(verify_t_inequality(d, 0).lhs == 0);
  }
  SUBCASE("Zp-cond quantifier range: t^2 matters for n = 5 only") {
    const auto d5 = zp_data(trivial_profile(3, {1, 0, 1, 1, 0, 1}), {1, 0, 1}, 5);
    CHECK(verify_theorem_zp(d5).verdict == Verdict::kNotApplicable);
    const auto d7 = zp_data(trivial_profile(3, {1, 0, 0, 1, 1, 0, 0, 1}), {1, 0, 0, 1}, 7);
    CHECK(verify_theorem_zp(d7).hypotheses_hold());
  }
  SUBCASE("a wrong congruence fails") {
    const auto d = zp_data(trivial_profile(5, {1, 0, 0, 1}), {1, 1, 1, 1}, 3);
    CHECK(verify_theorem_zp(d).verdict == Verdict::kFail);
  }
  SUBCASE("Bredon's circle action") {
    const auto v = verify_torus(build_bredon_betti());
    CHECK(v.verdict == Verdict::kNotApplicable);
    CHECK(v.lhs == 6);
    CHECK(v.rhs == 8);
  }
  SUBCASE("Seifert family") {
    for (auto [b, s] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 1}, {3, 2}, {3, 4}})
      CHECK(verify_torus(build_seifert_betti(b, s)).verdict == Verdict::kPass);
    CHECK_THROWS(build_seifert_betti(2, 2));
    BettiData wrong = build_seifert_betti(1, 2);
    wrong.circles = 3;
    CHECK(verify_torus(wrong).verdict == Verdict::kFail);
  }
  SUBCASE("Bryan on a surface") {
    CohomologyProfile s2 = trivial_profile(3, {1, 0, 1});
    CHECK(verify_bryan(zp_data(s2, {2}, 2), 2, true).verdict == Verdict::kPass);
    CHECK(verify_bryan(zp_data(s2, {2}, 2), 2, false).verdict == Verdict::kNotApplicable);
  }
}

TEST_CASE("validators never fail when a hypothesis fails") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = trial % 3 == 0 ? 2 : trial % 3 == 1 ? 3 : 5;
    const int n = 1 + trial % 5;
    std::vector<GModule> mods;
    for (int i = 0; i <= n; ++i) {
      std::map<std::size_t, std::size_t> m;
      if (i == 0 || i == n) m[1] = 1;
      else
        for (std::size_t d = 1; d <= p; ++d)
          if (small(rng) == 0) m[d] = 1;
      mods.push_back(GModule::from_multiplicities(Field(p), m));
    }
    std::vector<std::size_t> fixed;
    for (int i = 0; i < 3; ++i) fixed.push_back(static_cast<std::size_t>(small(rng)));
    auto d = zp_data(CohomologyProfile::from_modules(p, std::move(mods)), fixed, n);
    d.no_p_torsion = trial % 7 != 0;
    for (const auto& v : {verify_theorem_zp(d), verify_theorem_zp_fp(d), verify_chi_t(d), verify_sokolov(d, 1)}) {
      if (!v.hypotheses_hold()) CHECK(v.verdict == Verdict::kNotApplicable);
      if (v.verdict == Verdict::kPass) CHECK(v.hypotheses_hold());
      if (v.modulus == 4 && v.hypotheses_hold())
        CHECK((v.verdict == Verdict::kPass) == (((v.lhs - v.rhs) % 4 + 4) % 4 == 0));
    }
  }
}

TEST_CASE("lemma 2n holds on Poincare-symmetric Betti sequences") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> small(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * (1 + trial % 5);
    std::vector<std::size_t> b(n + 1, 0);
    b[0] = b[n] = 1;
    for (int i = 1; i < n / 2; ++i) b[i] = b[n - i] = static_cast<std::size_t>(small(rng));
    // The middle form is skew when n/2 is odd.
    b[n / 2] = static_cast<std::size_t>(small(rng)) * ((n / 2) % 2 == 1 ? 2 : 1);
    CHECK(verify_lemma_2n(b, n).verdict == Verdict::kPass);
  }
}
