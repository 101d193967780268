#include "eqss/analysis.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "eqss/io.hpp"

namespace eqss {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

namespace {

constexpr std::size_t kListedFailures = 20;

nlohmann::json to_json(const CheckResult& c) {
  nlohmann::json f = nlohmann::json::array();
  for (std::size_t i = 0; i < c.failures.size() && i < kListedFailures; ++i) f.push_back(c.failures[i]);
  return {{"checked", c.checked}, {"failure_count", c.failures.size()}, {"failures", f}, {"ok", c.ok()}};
}

nlohmann::json envelope(const std::string& kind, const nlohmann::json& input) {
  return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"kind", kind},
          {"input_digest", "sha256:" + sha256_hex(input.dump())}};
}

std::vector<std::size_t> betti_list(const CohomologyProfile& p) {
  std::vector<std::size_t> b;
  for (std::size_t i = 0; i < p.degrees(); ++i) b.push_back(p.betti(i));
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

nlohmann::json profile_json(const CohomologyProfile& p) {
  nlohmann::json j = eqss::to_json(p);
  j["betti"] = betti_list(p);
  j["nice"] = p.nice();
  j["t_sum"] = t_sum(p);
  j["chi_t"] = chi_t(p);
  return j;
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& c) {
  std::vector<std::size_t> dims;
  for (const auto& b : cohomology_bases(c)) dims.push_back(b.representatives.cols());
  return dims;
}

FixedSetShape fixed_shape(const SimplicialGComplex& fixed, const CohomologyProfile& profile) {
  FixedSetShape s;
  s.betti = betti_list(profile);
  if (fixed.dimension() == 0) {
    s.finite = true;
    s.points = fixed.count(0);
  } else if (fixed.dimension() == 1) {
    std::vector<std::size_t> degree(fixed.count(0), 0);
    for (const auto& e : fixed.simplices(1)) ++degree[e[0]], ++degree[e[1]];
    s.circles_only = std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d == 2; });
    if (s.circles_only) s.circles = s.betti.empty() ? 0 : s.betti[0];
  }
  return s;
}

nlohmann::json shape_json(const FixedSetShape& s) {
  nlohmann::json j = {{"betti", s.betti}, {"empty", s.empty()}, {"finite", s.finite}};
  if (s.finite) j["points"] = s.points;
  if (s.circles_only) j["circles"] = s.circles;
  return j;
}

nlohmann::json counts_json(const SimplicialGComplex& k) {
  nlohmann::json c = nlohmann::json::array();
  for (int d = 0; d <= k.dimension(); ++d) c.push_back(k.count(static_cast<std::size_t>(d)));
  return c;
}

}  // namespace

bool ComplexAnalysis::has_failure() const {
  for (const CheckResult* c : {&e2, &convergence, &page_structure, &euler, &products, &swan_leibniz, &localization,
                               &free_oracle, &kunneth})
    if (!c->ok()) return true;
  if (!propagation.ok() || !rank_symmetry.ok()) return true;
  if (mod4.verdict.verdict == Verdict::kFail) return true;
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const CongruenceVerdict& v) { return v.verdict == Verdict::kFail; });
}

const CongruenceVerdict* ComplexAnalysis::verdict(const std::string& theorem) const {
  for (const auto& v : verdicts)
    if (v.theorem == theorem) return &v;
  return nullptr;
}

ComplexAnalysis analyze_complex(const SimplicialGComplex& input, const AnalysisOptions& options) {
  ComplexAnalysis a;
  const nlohmann::json input_json = to_json(input);
  a.report = envelope("simplicial", input_json);

  const SimplicialGComplex k = validate_and_regularize(input);
  const CochainComplex cochains(CellComplex::from_simplicial(k));
  cochains.verify();
  const auto bases = cohomology_bases(cochains);
  a.profile = cohomology_gmodules(cochains, bases);
  a.n = std::max(a.profile.top_degree(), 0);
  const PoincareCheck pd = check_poincare_duality(cochains, bases);
  a.poincare = pd.holds;
  a.trivial_action = k.trivial_action();

  const SimplicialGComplex fixed = fixed_subcomplex(k);
  a.free_action = fixed.count(0) == 0;
  std::unique_ptr<CochainComplex> fixed_cochains;
  if (!a.free_action) {
    fixed_cochains = std::make_unique<CochainComplex>(CellComplex::from_simplicial(fixed));
    a.fixed_profile = cohomology_gmodules(*fixed_cochains);
  } else {
    a.fixed_profile.p = k.p();
  }
  a.fixed = fixed_shape(fixed, a.fixed_profile);

  const int top = cochains.top_degree();
  const int kmax = options.kmax.value_or(SwanDoubleComplex::default_window(std::max(top, 0)));
  const SwanDoubleComplex dc(cochains, kmax);
  dc.verify();
  const SpectralSequence ss(dc);
  const int rmax = std::max(options.rmax.value_or(std::max(5, ss.final_page())), 2);

  // Tot cohomology and its oracles.
  a.tot_dims = total_cohomology_dims(dc);
  a.convergence = check_convergence(ss, a.tot_dims);
  a.e2 = check_e2_identification(ss, a.profile);
  a.page_structure = check_page_structure(ss);
  a.euler = check_euler_invariance(ss);
  a.zr = check_zr(ss);
  a.cond = check_condition_cond(ss);
  if (a.free_action) {
    a.quotient_dims = cohomology_dims(CochainComplex(quotient_complex(k)));
    a.free_oracle = check_free_oracle(a.tot_dims, a.quotient_dims);
    a.localization = check_localization(a.tot_dims, std::vector<std::size_t>(a.tot_dims.size(), 0), a.n);
  } else {
    const SwanDoubleComplex fixed_dc(*fixed_cochains, kmax);
    a.fixed_tot_dims = total_cohomology_dims(fixed_dc);
    a.localization = check_localization(a.tot_dims, a.fixed_tot_dims, a.n);
    const auto expected = kunneth_dims(betti_list(a.fixed_profile), a.fixed_tot_dims.size());
    a.kunneth.expect(expected == a.fixed_tot_dims, "fixed-set Tot dims differ from the trivial-action formula");
  }
  if (a.trivial_action) {
    const auto expected = kunneth_dims(betti_list(a.profile), a.tot_dims.size());
    a.kunneth.expect(expected == a.tot_dims, "Tot dims differ from the trivial-action formula");
  }

  // Products.
  for (int r = 2; r <= rmax && options.product_samples > 0; ++r) {
    ProductCheckOptions po;
    po.page = r;
    po.samples = options.product_samples;
    po.seed = options.seed + static_cast<std::uint64_t>(r);
    po.odd_odd_vanishing = r == 2 && a.profile.nice() && a.profile.p != 2;
    a.products.merge(check_product_laws(ss, po));
  }
  if (options.product_samples > 0) a.swan_leibniz = check_swan_leibniz(dc, options.product_samples, options.seed);

  // Duality.
  std::vector<std::unique_ptr<SpectralPageView>> views;
  std::vector<const PageView*> pages;
  for (int r = 2; r <= rmax; ++r) {
    views.push_back(std::make_unique<SpectralPageView>(ss, r, a.n));
    pages.push_back(views.back().get());
  }
  a.duality = duality_report(pages, a.n);
  a.propagation = pd_propagation_audit(pages, a.duality, a.n, a.zr);
  a.rank_symmetry = rank_symmetry_audit(pages, a.duality, a.n);
  a.mod4 = mod4_audit(pages, a.duality, a.n);

  // Validators.
  a.zp_data.manifold = a.profile;
  a.zp_data.fixed = a.fixed_profile;
  a.zp_data.n = a.n;
  a.zp_data.no_p_torsion = options.no_p_torsion;
  a.zp_data.poincare = a.poincare;
  a.zp_data.cond = a.cond;
  ProfileInput pin;
  pin.data = a.zp_data;
  pin.closed = a.poincare;
  if (a.fixed.circles_only) pin.circles = a.fixed.circles;
  if (a.fixed.finite) pin.fixed_points = a.fixed.points;
  a.verdicts = profile_verdicts(pin);

  // Report.
  nlohmann::json& rep = a.report;
  rep["input"] = {{"p", input.p()},
                  {"vertices", input.vertex_count()},
                  {"cells", counts_json(input)},
                  {"regularized_cells", counts_json(k)},
                  {"subdivided", k.vertex_count() != input.vertex_count()}};
  rep["action"] = {{"free", a.free_action}, {"trivial", a.trivial_action}, {"fixed_set", shape_json(a.fixed)}};
  nlohmann::json trusted = nlohmann::json::array();
  for (int r = 2; r <= rmax; ++r) trusted.push_back({{"r", r}, {"k_max", ss.trusted_column(r)}});
  rep["window"] = {{"k_max", kmax},
                   {"n", a.n},
                   {"final_page", ss.final_page()},
                   {"trusted_columns", trusted},
                   {"trusted_total_degree", ss.trusted_total_degree()},
                   {"tot_trusted_degree", dc.trusted_total_degree()}};
  rep["profile"] = profile_json(a.profile);
  rep["fixed_profile"] = profile_json(a.fixed_profile);
  rep["poincare"] = {{"holds", pd.holds}, {"n", pd.n}, {"pairing_ranks", pd.pairing_ranks}, {"detail", pd.detail}};
  rep["tot_dims"] = a.tot_dims;
  if (!a.free_action) rep["fixed_tot_dims"] = a.fixed_tot_dims;
  if (a.free_action) rep["quotient_dims"] = a.quotient_dims;

  nlohmann::json page_list = nlohmann::json::array();
  for (int r = 2; r <= rmax; ++r) {
    nlohmann::json cols = nlohmann::json::array();
    for (int c = 0; c <= ss.trusted_column(r); ++c) {
      nlohmann::json rows = nlohmann::json::array();
      for (int l = 0; l <= a.n; ++l) rows.push_back(ss.dim(r, c, l));
      cols.push_back(rows);
    }
    page_list.push_back({{"r", r}, {"dims", cols}});
  }
  rep["pages"] = page_list;

  rep["checks"] = {{"e2_identification", to_json(a.e2)},
                   {"convergence", to_json(a.convergence)},
                   {"page_structure", to_json(a.page_structure)},
                   {"euler_invariance", to_json(a.euler)},
                   {"product_laws", to_json(a.products)},
                   {"swan_leibniz", to_json(a.swan_leibniz)},
                   {"localization", to_json(a.localization)},
                   {"free_oracle", to_json(a.free_oracle)},
                   {"kunneth", to_json(a.kunneth)},
                   {"zr", a.zr},
                   {"cond", a.cond}};
  nlohmann::json dl = nlohmann::json::array();
  for (const auto& d : a.duality)
    dl.push_back({{"r", d.r}, {"pd", d.pd.to_json()}, {"wpd", d.wpd.to_json()}, {"sspd", d.sspd.to_json()}});
  rep["duality"] = dl;
  nlohmann::json m4 = a.mod4.verdict.to_json();
  m4["step_checks"] = a.mod4.step_checks;
  m4["skew_checks"] = a.mod4.skew_checks;
  rep["audits"] = {{"propagation", a.propagation.to_json()}, {"rank_symmetry", a.rank_symmetry.to_json()}, {"mod4", m4}};
  nlohmann::json vs = nlohmann::json::object();
  for (const auto& v : a.verdicts) vs[v.theorem] = v.to_json();
  rep["verdicts"] = vs;
  rep["status"] = a.has_failure() ? "fail" : "ok";
  return a;
}

namespace {

CohomologyProfile empty_profile(std::uint32_t p) {
  CohomologyProfile c;
  c.p = p;
  return c;
}

std::size_t get_count(const nlohmann::json& j, const char* key) {
  if (!j[key].is_number_unsigned() && !(j[key].is_number_integer() && j[key].get<long long>() >= 0))
    throw InputError(std::string("\"") + key + "\" must be a nonnegative integer");
  return j[key].get<std::size_t>();
}

std::vector<std::size_t> count_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j[key].is_array()) throw InputError(std::string("\"") + key + "\" must be an array of Betti numbers");
  std::vector<std::size_t> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw InputError(std::string("\"") + key + "\" entries must be nonnegative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

CohomologyProfile checked_profile(const nlohmann::json& j, const char* what) {
  try {
    return profile_from_json(j);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad ") + what + " profile: " + e.what());
  }
}

}  // namespace

ProfileInput profile_input_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("manifold")) throw InputError("profile input needs a \"manifold\" profile");
  ProfileInput in;
  in.data.manifold = checked_profile(j["manifold"], "manifold");
  in.data.fixed = j.contains("fixed") ? checked_profile(j["fixed"], "fixed") : empty_profile(in.data.manifold.p);
  if (in.data.fixed.p != in.data.manifold.p) throw InputError("manifold and fixed profiles use different primes");
  in.data.n = j.contains("n") ? static_cast<int>(get_count(j, "n")) : std::max(in.data.manifold.top_degree(), 0);
  if (j.contains("no_p_torsion")) {
    if (!j["no_p_torsion"].is_boolean()) throw InputError("\"no_p_torsion\" must be a boolean");
    in.data.no_p_torsion = j["no_p_torsion"].get<bool>();
  }
  if (j.contains("circles")) in.circles = get_count(j, "circles");
  if (j.contains("fixed_points")) in.fixed_points = get_count(j, "fixed_points");
  if (j.contains("closed")) {
    if (!j["closed"].is_boolean()) throw InputError("\"closed\" must be a boolean");
    in.closed = j["closed"].get<bool>();
  }
  return in;
}

nlohmann::json to_json(const ProfileInput& in) {
  nlohmann::json j = {{"manifold", eqss::to_json(in.data.manifold)},
                      {"n", in.data.n},
                      {"no_p_torsion", in.data.no_p_torsion},
                      {"closed", in.closed}};
  if (in.data.fixed.top_degree() >= 0) j["fixed"] = eqss::to_json(in.data.fixed);
  if (in.circles) j["circles"] = *in.circles;
  if (in.fixed_points) j["fixed_points"] = *in.fixed_points;
  return j;
}

BettiData betti_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("manifold"))
    throw InputError("Betti input needs \"n\" and \"manifold\"");
  BettiData d;
  d.n = static_cast<int>(get_count(j, "n"));
  d.manifold = count_list(j, "manifold");
  d.fixed = count_list(j, "fixed");
  if (j.contains("circles")) d.circles = get_count(j, "circles");
  return d;
}

nlohmann::json to_json(const BettiData& d) {
  nlohmann::json j = {{"n", d.n}, {"manifold", d.manifold}, {"fixed", d.fixed}};
  if (d.circles > 0) j["circles"] = d.circles;
  return j;
}

std::vector<CongruenceVerdict> profile_verdicts(const ProfileInput& in) {
  const ZpActionData& d = in.data;
  std::vector<CongruenceVerdict> out = {verify_theorem_zp(d), verify_theorem_zp_fp(d), verify_chi_t(d),
                                        verify_t_inequalities(d)};
  if (d.n == 3 && in.circles && *in.circles > 0) out.push_back(verify_sokolov(d, *in.circles));
  if (d.n == 2 && in.fixed_points && *in.fixed_points > 0) out.push_back(verify_bryan(d, *in.fixed_points, in.closed));
  if (d.n % 2 == 0) {
    std::vector<std::size_t> b;
    for (std::size_t i = 0; i < d.manifold.degrees(); ++i) b.push_back(d.manifold.betti(i));
    out.push_back(verify_lemma_2n(b, d.n));
  }
  return out;
}

std::vector<CongruenceVerdict> betti_verdicts(const BettiData& d) {
  std::vector<CongruenceVerdict> out = {verify_torus(d)};
  if (d.n % 2 == 0) out.push_back(verify_lemma_2n(d.manifold, d.n));
  return out;
}

namespace {

nlohmann::json verdict_map(const std::vector<CongruenceVerdict>& vs) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& v : vs) out[v.theorem] = v.to_json();
  return out;
}

bool any_fail(const std::vector<CongruenceVerdict>& vs) {
  return std::any_of(vs.begin(), vs.end(), [](const CongruenceVerdict& v) { return v.verdict == Verdict::kFail; });
}

}  // namespace

nlohmann::json profile_report(const ProfileInput& in) {
  const nlohmann::json input = to_json(in);
  nlohmann::json rep = envelope("profile", input);
  rep["profile"] = profile_json(in.data.manifold);
  rep["fixed_profile"] = profile_json(in.data.fixed);
  rep["window"] = {{"n", in.data.n}};
  const auto vs = profile_verdicts(in);
  rep["verdicts"] = verdict_map(vs);
  rep["status"] = any_fail(vs) ? "fail" : "ok";
  return rep;
}

nlohmann::json betti_report(const BettiData& d) {
  nlohmann::json rep = envelope("betti", to_json(d));
  rep["betti"] = to_json(d);
  const auto vs = betti_verdicts(d);
  rep["verdicts"] = verdict_map(vs);
  rep["status"] = any_fail(vs) ? "fail" : "ok";
  return rep;
}

namespace {

std::string join(const nlohmann::json& arr) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : arr) {
    os << (first ? "" : " ") << v.dump();
    first = false;
  }
  return os.str();
}

void render_profile(std::ostringstream& os, const std::string& label, const nlohmann::json& p) {
  os << label << ": betti (" << join(p["betti"]) << "), t_sum " << p["t_sum"] << ", chi_t " << p["chi_t"]
     << (p["nice"].get<bool>() ? ", nice" : ", not nice") << "\n";
  std::size_t i = 0;
  for (const auto& d : p["degrees"]) {
    if (d["dim"].get<std::size_t>() > 0) {
      os << "  H^" << i << ":";
      for (const auto& [size, count] : d["decomposition"].items()) os << " V_" << size << "^" << count;
      os << "  (t = " << d["t"] << ")\n";
    }
    ++i;
  }
}

std::string flag_text(const nlohmann::json& f) {
  std::string s = f["holds"].get<bool>() ? "yes" : "no";
  if (!f["threshold"].is_null()) s += " (N=" + f["threshold"].dump() + ")";
  return s;
}

}  // namespace

std::string render_text(const nlohmann::json& rep) {
  std::ostringstream os;
  os << rep["tool"]["name"].get<std::string>() << " " << rep["tool"]["version"].get<std::string>() << "  "
     << rep["kind"].get<std::string>() << "  " << rep["input_digest"].get<std::string>() << "\n";
  if (rep.contains("input")) {
    const auto& in = rep["input"];
    os << "complex: p = " << in["p"] << ", cells (" << join(in["cells"]) << ")"
       << (in["subdivided"].get<bool>() ? ", regularized to (" + join(in["regularized_cells"]) + ")" : "") << "\n";
    const auto& act = rep["action"];
    os << "action: " << (act["free"].get<bool>() ? "free" : act["trivial"].get<bool>() ? "trivial" : "with fixed points")
       << ", fixed set betti (" << join(act["fixed_set"]["betti"]) << ")\n";
    const auto& w = rep["window"];
    os << "window: K = " << w["k_max"] << ", n = " << w["n"] << ", final page " << w["final_page"]
       << ", trusted total degree " << w["trusted_total_degree"] << "\n";
  }
  if (rep.contains("profile")) {
    render_profile(os, "cohomology", rep["profile"]);
    render_profile(os, "fixed set", rep["fixed_profile"]);
  }
  if (rep.contains("betti")) {
    os << "betti data: n = " << rep["betti"]["n"] << ", M (" << join(rep["betti"]["manifold"]) << "), fixed ("
       << join(rep["betti"]["fixed"]) << ")\n";
  }
  if (rep.contains("tot_dims")) os << "H^*(Tot): " << join(rep["tot_dims"]) << "\n";
  if (rep.contains("pages")) {
    for (const auto& page : rep["pages"]) {
      os << "E_" << page["r"] << " (rows l = n..0, columns k = 0..):\n";
      const auto& cols = page["dims"];
      const std::size_t rows = cols.empty() ? 0 : cols[0].size();
      for (std::size_t l = rows; l-- > 0;) {
        os << "  " << l << " |";
        for (const auto& c : cols) os << " " << c[l].get<std::size_t>();
        os << "\n";
      }
    }
  }
  if (rep.contains("checks")) {
    os << "checks:\n";
    for (const auto& [name, c] : rep["checks"].items()) {
      if (c.is_boolean()) {
        os << "  " << name << ": " << (c.get<bool>() ? "holds" : "fails") << "\n";
        continue;
      }
      os << "  " << name << ": " << (c["ok"].get<bool>() ? "ok" : "FAILED") << " (" << c["checked"] << " checked)\n";
      for (const auto& f : c["failures"]) os << "    " << f.get<std::string>() << "\n";
    }
  }
  if (rep.contains("duality")) {
    os << "duality:\n";
    for (const auto& d : rep["duality"])
      os << "  E_" << d["r"] << ": pd " << flag_text(d["pd"]) << ", wpd " << flag_text(d["wpd"]) << ", sspd "
         << flag_text(d["sspd"]) << "\n";
  }
  if (rep.contains("audits")) {
    for (const char* name : {"propagation", "rank_symmetry"}) {
      const auto& a = rep["audits"][name];
      os << "audit " << name << ": "
         << (a["applicable"].get<bool>() ? std::to_string(a["applications"].get<std::size_t>()) + " applications, " +
                                               std::to_string(a["violations"].size()) + " violations"
                                         : "not applicable")
         << "\n";
      for (const auto& v : a["violations"]) os << "  " << v.get<std::string>() << "\n";
    }
    const auto& m = rep["audits"]["mod4"];
    os << "audit mod4: " << m["lhs"] << " vs " << m["rhs"] << " mod 4, " << m["verdict"].get<std::string>() << "\n";
  }
  if (rep.contains("verdicts")) {
    os << "verdicts:\n";
    for (const auto& [name, v] : rep["verdicts"].items()) {
      os << "  " << name << ": " << v["verdict"].get<std::string>() << " (" << v["lhs"] << " " << v["relation"].get<std::string>()
         << " " << v["rhs"];
      if (v["modulus"].get<long long>() > 0) os << " mod " << v["modulus"];
      os << ")\n";
      for (const auto& h : v["hypotheses"])
        if (!h["pass"].get<bool>()) os << "    hypothesis failed: " << h["name"].get<std::string>() << " [" << h["evidence"].get<std::string>() << "]\n";
    }
  }
  os << "status: " << rep["status"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace eqss
