#include "eqss/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eqss {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kNotApplicable: return "not-applicable";
  }
  return "?";
}

bool CongruenceVerdict::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.pass; });
}

void CongruenceVerdict::conclude(bool relation_holds) {
  if (!hypotheses_hold())
    verdict = Verdict::kNotApplicable;
  else
    verdict = relation_holds ? Verdict::kPass : Verdict::kFail;
}

nlohmann::json CongruenceVerdict::to_json() const {
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : hypotheses) hs.push_back({{"name", h.name}, {"pass", h.pass}, {"evidence", h.evidence}});
  return {{"theorem", theorem}, {"hypotheses", hs},          {"lhs", lhs},   {"rhs", rhs},
          {"modulus", modulus}, {"relation", relation},      {"notes", notes}, {"verdict", to_string(verdict)}};
}

namespace {

std::string list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<std::size_t> betti_of(const CohomologyProfile& p) {
  std::vector<std::size_t> b;
  for (std::size_t i = 0; i < p.degrees(); ++i) b.push_back(p.betti(i));
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

std::vector<std::size_t> t_of(const CohomologyProfile& p) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < p.degrees(); ++i) t.push_back(p.t_at(i));
  while (!t.empty() && t.back() == 0) t.pop_back();
  return t;
}

bool congruent(long long a, long long b, long long m) { return ((a - b) % m + m) % m == 0; }

// Connected, vanishing above n, one-dimensional in degree n, b^i = b^{n-i}.
Hypothesis betti_poincare(const std::vector<std::size_t>& b, int n, const std::string& field) {
  Hypothesis h{"PD_" + field + "(" + std::to_string(n) + ")", true, "betti " + list(b)};
  auto at = [&](int i) -> std::size_t { return i >= 0 && i < static_cast<int>(b.size()) ? b[i] : 0; };
  if (at(0) != 1 || at(n) != 1 || static_cast<int>(b.size()) > n + 1) h.pass = false;
  for (int i = 0; i <= n; ++i)
    if (at(i) != at(n - i)) h.pass = false;
  return h;
}

Hypothesis poincare(const ZpActionData& d) {
  Hypothesis h = betti_poincare(betti_of(d.manifold), d.n, "F_p");
  if (d.poincare) {
    h.pass = h.pass && *d.poincare;
    h.evidence += *d.poincare ? ", cup pairings non-degenerate" : ", a cup pairing degenerates";
  }
  return h;
}

Hypothesis odd_prime(std::uint32_t p) { return {"p != 2", p != 2, "p = " + std::to_string(p)}; }

Hypothesis nice(const CohomologyProfile& m) {
  std::ostringstream os;
  bool ok = true;
  for (std::size_t i = 0; i < m.degrees(); ++i) {
    if (is_nice(m.decompositions[i], m.p)) continue;
    ok = false;
    os << "H^" << i << " has a summand V_d with 1 < d < p; ";
  }
  std::string ev = os.str();
  if (ok) ev = "every H^i is a sum of V_1 and V_p";
  else ev.resize(ev.size() - 2);
  return {"nice action", ok, ev};
}

Hypothesis no_torsion(const ZpActionData& d) {
  return {"no p-torsion in H^*(M; Z)", d.no_p_torsion, d.no_p_torsion ? "asserted" : "not asserted"};
}

Hypothesis zp_cond(const ZpActionData& d) {
  Hypothesis h{"condition (Zp-cond)", true, ""};
  if (d.n % 2 == 0) {
    h.evidence = "n = " + std::to_string(d.n) + " is even";
    return h;
  }
  if (!fixed_set_nonempty(d)) {
    h.pass = false;
    h.evidence = "n is odd and the fixed set is empty";
    return h;
  }
  for (int l = 2; l <= (d.n - 1) / 2; l += 2) {
    if (d.manifold.t_at(l) != 0) {
      h.pass = false;
      h.evidence = "t^" + std::to_string(l) + "(M) = " + std::to_string(d.manifold.t_at(l));
      return h;
    }
  }
  h.evidence = "fixed set nonempty, t^l(M) = 0 for even 0 < l <= (n-1)/2";
  return h;
}

Hypothesis cond(const ZpActionData& d) {
  if (d.cond) return {"condition (cond)", *d.cond, *d.cond ? "odd d_r vanish for k >= n" : "an odd d_r is nonzero for k >= n"};
  return {"condition (cond)", d.n <= 3, d.n <= 3 ? "automatic for n <= 3" : "not computed"};
}

Hypothesis nonempty(const ZpActionData& d) {
  const bool ok = fixed_set_nonempty(d);
  return {"fixed set nonempty", ok, "fixed betti " + list(betti_of(d.fixed))};
}

CongruenceVerdict t_sum_congruence(const ZpActionData& d, const std::string& name) {
  CongruenceVerdict v;
  v.theorem = name;
  v.modulus = 4;
  v.relation = "congruent";
  v.lhs = static_cast<long long>(t_sum(d.fixed));
  v.rhs = static_cast<long long>(t_sum(d.manifold));
  v.notes.push_back("t(M^G) = " + list(t_of(d.fixed)) + ", t(M) = " + list(t_of(d.manifold)));
  return v;
}

}  // namespace

bool fixed_set_nonempty(const ZpActionData& d) { return d.fixed.top_degree() >= 0; }

CongruenceVerdict verify_theorem_zp(const ZpActionData& d) {
  CongruenceVerdict v = t_sum_congruence(d, "zp");
  v.hypotheses = {odd_prime(d.manifold.p), nice(d.manifold), poincare(d), no_torsion(d), zp_cond(d)};
  v.conclude(congruent(v.lhs, v.rhs, 4));
  return v;
}

CongruenceVerdict verify_theorem_zp_fp(const ZpActionData& d) {
  CongruenceVerdict v = t_sum_congruence(d, "zp-fp");
  v.hypotheses = {odd_prime(d.manifold.p), nice(d.manifold), poincare(d), zp_cond(d), cond(d), nonempty(d)};
  v.conclude(congruent(v.lhs, v.rhs, 4));
  return v;
}

CongruenceVerdict verify_chi_t(const ZpActionData& d) {
  CongruenceVerdict v;
  v.theorem = "chi-t";
  v.relation = "equal";
  v.lhs = chi_t(d.fixed);
  v.rhs = chi_t(d.manifold);
  v.hypotheses = {odd_prime(d.manifold.p), nice(d.manifold), no_torsion(d)};
  v.notes.push_back("t(M^G) = " + list(t_of(d.fixed)) + ", t(M) = " + list(t_of(d.manifold)));
  v.conclude(v.lhs == v.rhs);
  return v;
}

CongruenceVerdict verify_t_inequality(const ZpActionData& d, std::size_t k) {
  CongruenceVerdict v;
  v.theorem = "t-inequality";
  v.relation = "at most";
  v.lhs = static_cast<long long>(t_tail(d.fixed, k));
  v.rhs = static_cast<long long>(t_tail(d.manifold, k));
  v.notes.push_back("k = " + std::to_string(k));
  v.conclude(v.lhs <= v.rhs);
  return v;
}

CongruenceVerdict verify_t_inequalities(const ZpActionData& d) {
  const std::size_t top = std::max(d.manifold.degrees(), d.fixed.degrees());
  for (std::size_t k = 0; k < top; ++k) {
    CongruenceVerdict v = verify_t_inequality(d, k);
    if (v.verdict != Verdict::kPass) return v;
  }
  CongruenceVerdict v = verify_t_inequality(d, 0);
  v.notes.back() = "checked k = 0.." + std::to_string(top == 0 ? 0 : top - 1) + ", shown k = 0";
  return v;
}

CongruenceVerdict verify_sokolov(const ZpActionData& d, std::size_t circles) {
  CongruenceVerdict v;
  v.theorem = "sokolov";
  v.modulus = 2;
  v.relation = "congruent";
  const std::size_t t1 = d.manifold.t_at(1);
  v.lhs = static_cast<long long>(circles);
  v.rhs = static_cast<long long>(1 + t1);
  const auto fb = betti_of(d.fixed);
  const bool circle_set = fb.size() == 2 && fb[0] == circles && fb[1] == circles;
  v.hypotheses = {odd_prime(d.manifold.p),
                  nice(d.manifold),
                  {"closed orientable 3-manifold", d.n == 3 && poincare(d).pass, "n = " + std::to_string(d.n)},
                  {"fixed set is s > 0 circles", circles > 0 && circle_set,
                   "s = " + std::to_string(circles) + ", fixed betti " + list(fb)}};
  const bool parity = congruent(v.lhs, v.rhs, 2);
  const bool bound = circles <= 1 + t1;
  const bool periodic = circles != 1 || d.manifold.betti(1) != 1;
  v.notes.push_back("s <= 1 + t^1: " + std::string(bound ? "yes" : "no"));
  if (circles == 1) v.notes.push_back("one fixed circle and dim H^1 = " + std::to_string(d.manifold.betti(1)));
  v.conclude(parity && bound && periodic);
  return v;
}

CongruenceVerdict verify_bryan(const ZpActionData& d, std::size_t fixed_points, bool closed) {
  CongruenceVerdict v;
  v.theorem = "bryan";
  v.relation = "equal";
  std::size_t h1 = 0;
  if (d.manifold.degrees() > 1) h1 = group_cohomology(d.manifold.modules[1], 1).dim;
  v.lhs = static_cast<long long>(fixed_points);
  v.rhs = static_cast<long long>(2 + h1);
  v.hypotheses = {{"closed connected surface", closed && d.n == 2 && d.manifold.betti(0) == 1,
                   closed ? "n = " + std::to_string(d.n) : "surface has boundary"},
                  {"fixed set nonempty and finite", fixed_points > 0 && d.fixed.top_degree() == 0,
                   std::to_string(fixed_points) + " fixed points"}};
  v.notes.push_back("dim H^1(Z/p, H^1(F)) = " + std::to_string(h1));
  v.conclude(v.lhs == v.rhs);
  return v;
}

CongruenceVerdict verify_torus(const BettiData& data) {
  CongruenceVerdict v;
  v.theorem = "torus";
  v.modulus = 4;
  v.relation = "congruent";
  v.lhs = std::accumulate(data.fixed.begin(), data.fixed.end(), 0LL);
  v.rhs = std::accumulate(data.manifold.begin(), data.manifold.end(), 0LL);
  v.hypotheses.push_back(betti_poincare(data.manifold, data.n, "Q"));

  Hypothesis s1{"condition (S^1-cond)", true, ""};
  const bool fixed_nonempty = v.lhs > 0;
  if (data.n % 2 == 0) {
    s1.evidence = "n = " + std::to_string(data.n) + " is even";
  } else if (!fixed_nonempty) {
    s1.pass = false;
    s1.evidence = "n is odd and the fixed set is empty";
  } else {
    s1.evidence = "fixed set nonempty, b^i(M) = 0 for even 0 < i <= (n-1)/2";
    for (int i = 2; i <= (data.n - 1) / 2; i += 2)
      if (i < static_cast<int>(data.manifold.size()) && data.manifold[i] != 0) {
        s1.pass = false;
        s1.evidence = "b^" + std::to_string(i) + "(M) = " + std::to_string(data.manifold[i]);
        break;
      }
  }
  v.hypotheses.push_back(s1);
  bool holds = congruent(v.lhs, v.rhs, 4);
  if (data.n == 3 && data.circles > 0) {
    const std::size_t b1 = data.manifold.size() > 1 ? data.manifold[1] : 0;
    const bool bound = data.circles <= 1 + b1;
    const bool parity = data.circles % 2 == (1 + b1) % 2;
    v.notes.push_back("s = " + std::to_string(data.circles) + ", b_1 = " + std::to_string(b1) +
                      ": s <= 1 + b_1 " + (bound ? "holds" : "fails") + ", s = 1 + b_1 mod 2 " +
                      (parity ? "holds" : "fails"));
    holds = holds && bound && parity;
  }
  v.notes.push_back("b(M^T) = " + list(data.fixed) + ", b(M) = " + list(data.manifold));
  v.conclude(holds);
  return v;
}

CongruenceVerdict verify_lemma_2n(const std::vector<std::size_t>& betti, int n) {
  CongruenceVerdict v;
  v.theorem = "lemma-2n";
  v.modulus = 4;
  v.relation = "congruent";
  v.hypotheses = {{"n even", n % 2 == 0, "n = " + std::to_string(n)}, betti_poincare(betti, n, "Q")};
  long long chi = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    v.lhs += static_cast<long long>(betti[i]);
    chi += (i % 2 ? -1 : 1) * static_cast<long long>(betti[i]);
  }
  v.rhs = chi;
  v.conclude(congruent(v.lhs, v.rhs, 4));
  return v;
}

}  // namespace eqss
