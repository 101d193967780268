// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "eqss/analysis.hpp"
#include "eqss/corpus.hpp"
#include "eqss/gmodule.hpp"

using namespace eqss;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

int g_failed = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, bool pass, const std::string& detail) {
  if (!pass) ++g_failed;
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

struct Named {
  std::string name;
  ComplexAnalysis a;
};

std::string first_failure(const std::string& who, const CheckResult& c) {
  return c.failures.empty() ? std::string() : who + ": " + c.failures.front();
}

Matrix random_invertible(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> value(0, p - 1);
  for (;;) {
    Matrix m(p, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<Elem>(value(rng));
    if (rank(m) == n) return m;
  }
}

void criterion_1() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20241);
  std::size_t mismatches = 0, table = 0, table_bad = 0;
  const std::uint32_t primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t p = primes[trial % 4];
    const Field f(p);
    std::map<std::size_t, std::size_t> want;
    std::uniform_int_distribution<std::size_t> summands(1, 5), block(1, p), mult(1, 2);
    const std::size_t s = summands(rng);
    for (std::size_t i = 0; i < s; ++i) want[block(rng)] += mult(rng);
    const GModule m = GModule::from_multiplicities(f, want);
    const GModule c = m.conjugated(random_invertible(rng, p, m.dim()));
    if (decompose(c).multiplicities != want) ++mismatches;
  }
  for (std::uint32_t p : primes) {
    const Field f(p);
    for (std::size_t i = 1; i <= p; ++i) {
      const GModule v = GModule::indecomposable(f, i);
      for (unsigned k = 0; k <= 6; ++k) {
        const std::size_t expected = (i < p || k == 0) ? 1 : 0;
        ++table;
        if (group_cohomology(v, k).dim != expected) ++table_bad;
      }
    }
  }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << "500 conjugated sums, " << mismatches << " mismatches; cohomology table " << table - table_bad << "/" << table
     << "; " << t << " s (limit 10)";
  report(1, mismatches == 0 && table_bad == 0 && t < 10.0, os.str());
}

void criterion_2() {
  const auto t0 = Clock::now();
  AnalysisOptions o;
  o.product_samples = 0;
  bool ok = true;
  std::size_t checked = 0;
  std::string why;
  for (std::uint32_t p : {3u, 5u}) {
    for (const auto& [label, k] : {std::pair{std::string("circle"), build_circle(p)},
                                   std::pair{std::string("sphere_join(1,1)"), build_sphere_join(p, 1, 1)}}) {
      const ComplexAnalysis a = analyze_complex(k, o);
      const std::string who = label + " p=" + std::to_string(p);
      if (!a.free_action || a.free_oracle.checked == 0 || !a.free_oracle.ok()) {
        ok = false;
        if (why.empty()) why = a.free_action ? first_failure(who, a.free_oracle) : who + " not free";
      }
      checked += a.free_oracle.checked;
    }
  }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << checked << " degrees compared with the quotient; " << t << " s (limit 60)" << (why.empty() ? "" : "; ") << why;
  report(2, ok && t < 60.0, os.str());
}

void criterion_3() {
  AnalysisOptions o;
  o.product_samples = 0;
  const ComplexAnalysis a = analyze_complex(build_sphere_join(5, 1, 0), o);
  bool ok = a.localization.ok() && a.localization.checked > 0;
  const auto kun = kunneth_dims(a.fixed.betti, a.fixed_tot_dims.size());
  std::size_t degrees = 0;
  for (std::size_t s = 4; s < a.tot_dims.size(); ++s) {
    ++degrees;
    ok = ok && s < a.fixed_tot_dims.size() && a.tot_dims[s] == 2 && a.fixed_tot_dims[s] == 2 && kun[s] == 2;
  }
  ok = ok && degrees > 0 && kun == a.fixed_tot_dims;
  std::ostringstream os;
  os << "sphere_join(5,1,0): dim 2 in " << degrees << " degrees 3 < s <= " << a.tot_dims.size() - 1
     << ", fixed set matches Kunneth";
  if (!a.localization.ok()) os << "; " << a.localization.failures.front();
  report(3, ok, os.str());
}

void check_all(int id, const std::vector<Named>& all, const std::function<const CheckResult&(const Named&)>& pick,
               const std::string& what) {
  bool ok = true;
  std::size_t checked = 0;
  std::string why;
  for (const auto& x : all) {
    const CheckResult& c = pick(x);
    checked += c.checked;
    if (!c.ok() || c.checked == 0) {
      ok = false;
      if (why.empty()) why = c.ok() ? x.name + ": nothing checked" : first_failure(x.name, c);
    }
  }
  std::ostringstream os;
  os << all.size() << " corpus complexes, " << checked << " " << what << (why.empty() ? "" : "; ") << why;
  report(id, ok, os.str());
}

void criterion_6(const std::vector<Named>& all) {
  bool ok = true;
  std::size_t wpd_pages = 0, sspd_pages = 0, audit_apps = 0, audited = 0;
  std::string why;
  auto fail = [&](const std::string& s) {
    ok = false;
    if (why.empty()) why = s;
  };
  for (const auto& x : all) {
    const ComplexAnalysis& a = x.a;
    const bool fixed_point_pd = !a.fixed.empty() && a.poincare;
    if (fixed_point_pd) {
      for (const auto& d : a.duality) {
        if (d.r < 2 || d.r > 5) continue;
        ++wpd_pages;
        if (!d.wpd.holds) fail(x.name + ": wpd fails on E_" + std::to_string(d.r));
      }
      if (a.profile.nice() && a.n <= 3) {
        for (const auto& d : a.duality) {
          ++sspd_pages;
          if (!d.sspd.holds) fail(x.name + ": sspd fails on E_" + std::to_string(d.r));
        }
      }
    }
    for (const AuditReport* r : {&a.propagation, &a.rank_symmetry}) {
      if (!r->applicable) continue;
      ++audited;
      audit_apps += r->applications;
      if (!r->ok()) fail(x.name + ": " + r->violations.front());
    }
  }
  std::ostringstream os;
  os << "wpd on " << wpd_pages << " pages, sspd on " << sspd_pages << " pages; " << audited << " audits, "
     << audit_apps << " applications" << (why.empty() ? "" : "; ") << why;
  report(6, ok && wpd_pages > 0 && sspd_pages > 0 && audited > 0, os.str());
}

void criterion_7(const std::vector<Named>& all) {
  bool ok = true;
  std::size_t qualifying = 0, steps = 0, even_cases = 0, skew = 0;
  std::string why;
  for (const auto& x : all) {
    const Mod4Audit& m = x.a.mod4;
    steps += m.step_checks;
    skew += m.skew_checks;
    if (m.verdict.verdict == Verdict::kPass) ++qualifying;
    if (m.verdict.verdict == Verdict::kFail || !m.failures.empty()) {
      ok = false;
      if (why.empty()) why = x.name + ": " + (m.failures.empty() ? "endpoint congruence" : m.failures.front());
    }
    if (x.a.n % 2 == 0) {
      ++even_cases;
      if (m.skew_checks == 0) {
        ok = false;
        if (why.empty()) why = x.name + ": no skew check for even n";
      }
    }
  }
  std::ostringstream os;
  os << qualifying << " qualifying complexes, " << steps << " step checks, " << skew << " skew checks, " << even_cases
     << " even-n cases" << (why.empty() ? "" : "; ") << why;
  report(7, ok && qualifying > 0, os.str());
}

void criterion_8(const std::vector<Named>& all) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;
  auto fail = [&](const std::string& s) {
    ok = false;
    if (why.empty()) why = s;
  };

  AnalysisOptions o;
  o.product_samples = 0;
  const ComplexAnalysis sj = analyze_complex(build_sphere_join(5, 1, 0), o);
  for (const char* th : {"zp", "zp-fp"}) {
    const CongruenceVerdict* v = sj.verdict(th);
    if (!v || v->verdict != Verdict::kPass || v->lhs != 2 || v->rhs != 2 || v->modulus != 4)
      fail(std::string("sphere_join(5,1,0): ") + th);
  }

  std::size_t sokolov = 0, chi = 0, tineq = 0;
  auto scan = [&](const std::string& who, const std::vector<CongruenceVerdict>& vs) {
    for (const auto& v : vs) {
      if (v.verdict == Verdict::kFail) fail(who + ": " + v.theorem + " fails");
      if (v.verdict != Verdict::kPass) continue;
      if (v.theorem == "sokolov") ++sokolov;
      if (v.theorem == "chi-t") ++chi;
      if (v.theorem == "t-inequality") ++tineq;
    }
  };
  for (const auto& x : all) scan(x.name, x.a.verdicts);

  for (const auto& e : corpus()) {
    if (e.kind == EntryKind::kSimplicial) continue;
    const json doc = e.input();
    std::vector<CongruenceVerdict> vs = e.kind == EntryKind::kProfile ? profile_verdicts(profile_input_from_json(doc))
                                                                      : betti_verdicts(betti_from_json(doc));
    scan(e.name, vs);
    const bool mp = e.name.rfind("mp-", 0) == 0;
    const bool bredon = e.name.rfind("bredon", 0) == 0;
    for (const auto& v : vs) {
      if (mp && (v.theorem == "zp" || v.theorem == "zp-fp") && v.verdict != Verdict::kNotApplicable)
        fail(e.name + ": " + v.theorem + " should be not-applicable");
      const bool headline = v.theorem == "zp" || v.theorem == "zp-fp" || v.theorem == "torus";
      if (bredon && headline && v.verdict != Verdict::kNotApplicable)
        fail(e.name + ": " + v.theorem + " should be not-applicable");
    }
  }

  std::size_t family = 0;
  for (const auto& [b, s] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 1}, {3, 2}, {3, 4}}) {
    if (verify_torus(build_seifert_betti(b, s)).verdict == Verdict::kPass)
      ++family;
    else
      fail("seifert (" + std::to_string(b) + "," + std::to_string(s) + ") fails");
  }
  if (verify_torus(build_bredon_betti()).verdict != Verdict::kNotApplicable) fail("bredon Betti data applicable");
  if (sokolov == 0) fail("no Sokolov instance");

  const double t = seconds_since(t0);
  std::ostringstream os;
  os << "zp/zp-fp 2 = 2 mod 4; sokolov " << sokolov << ", chi-t " << chi << ", t-inequality " << tineq
     << " passes; circle family " << family << "/4; " << t << " s (limit 30)" << (why.empty() ? "" : "; ") << why;
  report(8, ok && t < 30.0, os.str());
}

void criterion_9(const std::vector<Named>& all) {
  bool ok = true;
  std::size_t least = SIZE_MAX, total = 0;
  std::string why;
  for (const auto& x : all) {
    const std::size_t n = x.a.products.checked;
    total += n + x.a.swan_leibniz.checked;
    least = std::min(least, n);
    if (!x.a.products.ok() || !x.a.swan_leibniz.ok() || n < 200) {
      ok = false;
      if (why.empty())
        why = !x.a.products.ok()       ? first_failure(x.name, x.a.products)
              : !x.a.swan_leibniz.ok() ? first_failure(x.name, x.a.swan_leibniz)
                                       : x.name + ": only " + std::to_string(n) + " evaluations";
    }
  }
  std::ostringstream os;
  os << total << " evaluations, at least " << least << " per complex" << (why.empty() ? "" : "; ") << why;
  report(9, ok, os.str());
}

void criterion_10() {
  const auto t0 = Clock::now();
  std::vector<const CorpusEntry*> entries;
  for (const auto& e : corpus()) entries.push_back(&e);
  const auto first = run_corpus(entries);
  const double t = seconds_since(t0);
  const auto second = run_corpus(entries);
  bool same = first.size() == second.size();
  bool ok = true;
  for (std::size_t i = 0; same && i < first.size(); ++i) {
    same = first[i].report.dump(2) == second[i].report.dump(2) &&
           render_text(first[i].report) == render_text(second[i].report);
    ok = ok && first[i].ok();
  }
  std::ostringstream os;
  os << first.size() << " entries, reports " << (same ? "byte-identical" : "differ") << ", expectations "
     << (ok ? "met" : "NOT met") << "; corpus run " << t << " s (limit 300)";
  report(10, same && ok && t < 300.0, os.str());
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  criterion_1();
  criterion_2();
  criterion_3();

  std::vector<Named> all;
  AnalysisOptions o;
  o.product_samples = 200;
  for (const auto& e : corpus()) {
    if (e.kind != EntryKind::kSimplicial) continue;
    all.push_back({e.name, analyze_complex(complex_from_json(e.input().dump()), o)});
  }

  check_all(4, all, [](const Named& x) -> const CheckResult& { return x.a.e2; }, "E_2 cells identified");
  check_all(5, all, [](const Named& x) -> const CheckResult& { return x.a.convergence; }, "total degrees converged");
  criterion_6(all);
  criterion_7(all);
  criterion_8(all);
  criterion_9(all);
  criterion_10();
  std::printf("%s\n", g_failed == 0 ? "all criteria pass" : (std::to_string(g_failed) + " criteria fail").c_str());
  return g_failed == 0 ? 0 : 1;
}
