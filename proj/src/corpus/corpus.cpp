#include "eqss/corpus.hpp"

#include <map>
#include <string>

#include "eqss/io.hpp"

namespace eqss {

std::string to_string(EntryKind k) {
  switch (k) {
    case EntryKind::kSimplicial: return "simplicial";
    case EntryKind::kProfile: return "algebraic-profile";
    case EntryKind::kBetti: return "betti-data";
  }
  return "?";
}

namespace {

using J = nlohmann::json;

nlohmann::json trivial_profile(std::uint32_t p, const std::vector<std::size_t>& betti) {
  J degrees = J::array();
  for (std::size_t b : betti) {
    J dec = J::object();
    if (b > 0) dec["1"] = b;
    degrees.push_back({{"decomposition", dec}});
  }
  return {{"p", p}, {"degrees", degrees}};
}

nlohmann::json profile_doc(const CohomologyProfile& m, const std::vector<std::size_t>& fixed_betti, int n,
                           std::optional<std::size_t> circles = std::nullopt,
                           std::optional<std::size_t> points = std::nullopt) {
  ProfileInput in;
  in.data.manifold = m;
  in.data.fixed = profile_from_json(trivial_profile(m.p, fixed_betti));
  in.data.n = n;
  in.circles = circles;
  in.fixed_points = points;
  return to_json(in);
}

CohomologyProfile modules_profile(std::uint32_t p, const std::vector<std::map<std::size_t, std::size_t>>& degrees) {
  std::vector<GModule> modules;
  for (const auto& d : degrees) modules.push_back(GModule::from_multiplicities(Field(p), d));
  return CohomologyProfile::from_modules(p, std::move(modules));
}

std::vector<Expectation> wpd_pages(int first, int last) {
  std::vector<Expectation> out;
  for (int r = first; r <= last; ++r) out.push_back({"/duality/" + std::to_string(r - 2) + "/wpd/holds", true});
  return out;
}

std::vector<Expectation> sspd_pages(int first, int last) {
  std::vector<Expectation> out;
  for (int r = first; r <= last; ++r) out.push_back({"/duality/" + std::to_string(r - 2) + "/sspd/holds", true});
  return out;
}

std::vector<Expectation> operator+(std::vector<Expectation> a, const std::vector<Expectation>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> c;
  auto simplicial = [&](std::string name, std::string desc, std::function<SimplicialGComplex()> build,
                        std::vector<Expectation> ex, std::vector<Expectation> pages = {}) {
    c.push_back({std::move(name), EntryKind::kSimplicial, std::move(desc), [build] { return to_json(build()); },
                 std::move(ex) + pages});
  };
  auto profile = [&](std::string name, std::string desc, std::function<J()> doc, std::vector<Expectation> ex) {
    c.push_back({std::move(name), EntryKind::kProfile, std::move(desc), std::move(doc), std::move(ex)});
  };
  auto betti = [&](std::string name, std::string desc, std::function<BettiData()> data, std::vector<Expectation> ex) {
    c.push_back({std::move(name), EntryKind::kBetti, std::move(desc), [data] { return to_json(data()); },
                 std::move(ex)});
  };

  simplicial("point-p3", "a point with the trivial Z/3 action", [] { return build_point(3); },
             {{"/profile/betti", {1}},
              {"/tot_dims/0", 1},
              {"/tot_dims/5", 1},
              {"/audits/mod4/lhs", 1},
              {"/audits/mod4/rhs", 1},
              {"/verdicts/zp/verdict", "pass"},
              {"/verdicts/chi-t/verdict", "pass"}},
                 wpd_pages(2, 5) + sspd_pages(2, 5));
  for (std::uint32_t p : {2u, 3u, 5u}) {
    simplicial("circle-free-p" + std::to_string(p), "rotation of a polygon, free",
               [p] { return build_circle(p); },
               {{"/profile/betti", {1, 1}},
                {"/action/free", true},
                {"/quotient_dims", {1, 1}},
                {"/tot_dims/1", 1},
                {"/tot_dims/2", 0},
                {"/verdicts/zp/verdict", "not-applicable"},
                {"/verdicts/chi-t/verdict", p == 2 ? "not-applicable" : "pass"}});
  }
  simplicial("circle-trivial-p3", "polygon with the trivial Z/3 action", [] { return build_trivial_circle(3); },
             {{"/profile/betti", {1, 1}},
              {"/action/trivial", true},
              {"/tot_dims/0", 1},
              {"/tot_dims/1", 2},
              {"/tot_dims/6", 2},
              {"/verdicts/zp/verdict", "pass"},
              {"/verdicts/chi-t/verdict", "pass"}},
                 wpd_pages(2, 5));
  for (std::uint32_t p : {3u, 5u}) {
    simplicial("s3-free-p" + std::to_string(p), "join of two rotated polygons, free; quotient a lens space",
               [p] { return build_sphere_join(p, 1, 1); },
               {{"/profile/betti", {1, 0, 0, 1}},
                {"/action/free", true},
                {"/quotient_dims", {1, 1, 1, 1}},
                {"/tot_dims/3", 1},
                {"/tot_dims/4", 0},
                {"/verdicts/zp/verdict", "not-applicable"},
                {"/verdicts/chi-t/verdict", "pass"}});
  }
  for (std::uint32_t p : {3u, 5u}) {
    simplicial("s3-semifree-p" + std::to_string(p), "join rotating one polygon; fixed set a circle",
               [p] { return build_sphere_join(p, 1, 0); },
               {{"/profile/betti", {1, 0, 0, 1}},
                {"/action/fixed_set/betti", {1, 1}},
                {"/action/fixed_set/circles", 1},
                {"/tot_dims/4", 2},
                {"/tot_dims/9", 2},
                {"/audits/mod4/lhs", 2},
                {"/audits/mod4/rhs", 2},
                {"/audits/mod4/verdict", "pass"},
                {"/verdicts/zp/verdict", "pass"},
                {"/verdicts/zp/lhs", 2},
                {"/verdicts/zp/rhs", 2},
                {"/verdicts/zp-fp/verdict", "pass"},
                {"/verdicts/chi-t/verdict", "pass"},
                {"/verdicts/t-inequality/verdict", "pass"},
                {"/verdicts/sokolov/verdict", "pass"}},
                   wpd_pages(2, 5) + sspd_pages(2, 5));
  }
  for (std::uint32_t p : {3u, 5u}) {
    simplicial("s2-rotation-p" + std::to_string(p), "suspension of a rotated polygon; two fixed poles",
               [p] { return build_suspension_sphere(p); },
               {{"/profile/betti", {1, 0, 1}},
                {"/action/fixed_set/points", 2},
                {"/verdicts/bryan/verdict", "pass"},
                {"/verdicts/bryan/lhs", 2},
                {"/verdicts/zp/verdict", "pass"},
                {"/verdicts/chi-t/lhs", 2},
                {"/verdicts/chi-t/rhs", 2},
                {"/verdicts/lemma-2n/verdict", "pass"}},
                   wpd_pages(2, 5) + sspd_pages(2, 5));
  }
  simplicial("disk-rotation-p3", "cone on a rotated triangle; a disk with the apex fixed",
             [] { return build_cone(3); },
             {{"/profile/betti", {1}},
              {"/action/fixed_set/points", 1},
              {"/poincare/holds", true},
              {"/verdicts/chi-t/verdict", "pass"},
              {"/verdicts/zp/verdict", "pass"}},
             wpd_pages(2, 5) + sspd_pages(2, 5));
  simplicial("torus-rotation-p3", "seven-vertex torus with an order-3 rotation; three fixed points",
             [] { return build_torus_rotation(); },
             {{"/profile/betti", {1, 2, 1}},
              {"/profile/degrees/1/decomposition", {{"2", 1}}},
              {"/profile/nice", false},
              {"/action/fixed_set/points", 3},
              {"/verdicts/bryan/verdict", "pass"},
              {"/verdicts/bryan/lhs", 3},
              {"/verdicts/zp/verdict", "not-applicable"},
              {"/verdicts/lemma-2n/verdict", "pass"}},
                 wpd_pages(2, 5));

  for (std::uint32_t p : {3u, 5u, 2u}) {
    profile("mp-p" + std::to_string(p), "cohomology of M_p with the permuting action; fixed set a circle",
            [p] { return profile_doc(build_mp_profile(p), {1, 1}, 3, 1); },
            {{"/profile/betti", {1, p - 1, p - 1, 1}},
             {"/profile/nice", p == 2},
             {"/verdicts/zp/verdict", "not-applicable"},
             {"/verdicts/zp-fp/verdict", "not-applicable"}});
  }
  profile("bredon-z3-s3xs3", "cyclic permutation on triples in S^3 with (xy)z = 1; fixed set a point and S^2",
          [] { return profile_doc(modules_profile(3, {{{1, 1}}, {}, {}, {{2, 1}}, {}, {}, {{1, 1}}}), {2, 0, 1}, 6); },
          {{"/profile/nice", false},
           {"/verdicts/zp/verdict", "not-applicable"},
           {"/verdicts/chi-t/verdict", "not-applicable"},
           {"/verdicts/lemma-2n/verdict", "pass"}});
  profile("s2xs4-rotation-p3", "rotation of the S^2 factor of S^2 x S^4; fixed set two copies of S^4",
          [] { return profile_doc(profile_from_json(trivial_profile(3, {1, 0, 1, 0, 1, 0, 1})), {2, 0, 0, 0, 2}, 6); },
          {{"/verdicts/zp/verdict", "pass"},
           {"/verdicts/zp/lhs", 4},
           {"/verdicts/zp/rhs", 4},
           {"/verdicts/chi-t/verdict", "pass"},
           {"/verdicts/lemma-2n/verdict", "pass"}});
  profile("s1xs3-rotation-p5", "rotation of S^3 about a circle in S^1 x S^3; fixed set a torus",
          [] { return profile_doc(profile_from_json(trivial_profile(5, {1, 1, 0, 1, 1})), {1, 2, 1}, 4); },
          {{"/verdicts/zp/verdict", "pass"},
           {"/verdicts/zp/lhs", 4},
           {"/verdicts/chi-t/lhs", 0},
           {"/verdicts/chi-t/verdict", "pass"},
           {"/verdicts/t-inequality/verdict", "pass"}});

  for (auto [b, s] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 1}, {3, 2}, {3, 4}}) {
    betti("seifert-" + std::to_string(b) + "-" + std::to_string(s), "circle action on a 3-manifold with fixed circles",
          [b, s] { return build_seifert_betti(b, s); }, {{"/verdicts/torus/verdict", "pass"}});
  }
  betti("bredon-s1", "circle action on S^3 x S^5 x S^9", build_bredon_betti,
        {{"/verdicts/torus/verdict", "not-applicable"},
         {"/verdicts/torus/lhs", 6},
         {"/verdicts/torus/rhs", 8}});
  betti("s2-rotation-s1", "rotation of S^2 about an axis",
        [] {
          BettiData d;
          d.n = 2;
          d.manifold = {1, 0, 1};
          d.fixed = {2};
          return d;
        },
        {{"/verdicts/torus/verdict", "pass"}, {"/verdicts/lemma-2n/verdict", "pass"}});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = make_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw InputError("no corpus entry named \"" + name + "\"");
}

EntryKind document_kind(const nlohmann::json& input) {
  if (!input.is_object()) throw InputError("input must be a JSON object");
  if (input.contains("simplices")) return EntryKind::kSimplicial;
  if (input.contains("manifold")) return input["manifold"].is_array() ? EntryKind::kBetti : EntryKind::kProfile;
  throw InputError("cannot tell the input kind: expected \"simplices\" or \"manifold\"");
}

nlohmann::json analyze_document(const nlohmann::json& input, const AnalysisOptions& options) {
  switch (document_kind(input)) {
    case EntryKind::kSimplicial: return analyze_complex(complex_from_json(input.dump(2)), options).report;
    case EntryKind::kProfile: return profile_report(profile_input_from_json(input));
    case EntryKind::kBetti: return betti_report(betti_from_json(input));
  }
  return {};
}

bool EntryResult::ok() const { return mismatches.empty() && report.value("status", "") == "ok"; }

EntryResult run_entry(const CorpusEntry& entry, const AnalysisOptions& options) {
  EntryResult r;
  r.name = entry.name;
  r.report = analyze_document(entry.input(), options);
  for (const auto& ex : entry.expectations) {
    const nlohmann::json::json_pointer ptr(ex.pointer);
    if (!r.report.contains(ptr)) {
      r.mismatches.push_back(ex.pointer + ": missing, expected " + ex.value.dump());
    } else if (r.report[ptr] != ex.value) {
      r.mismatches.push_back(ex.pointer + ": " + r.report[ptr].dump() + ", expected " + ex.value.dump());
    }
  }
  return r;
}

std::vector<EntryResult> run_corpus(const std::vector<const CorpusEntry*>& entries, const AnalysisOptions& options) {
  std::vector<EntryResult> results(entries.size());
  const long long count = static_cast<long long>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      results[i] = run_entry(*entries[i], options);
    } catch (const std::exception& e) {
      results[i].name = entries[i]->name;
      results[i].mismatches.push_back(std::string("error: ") + e.what());
    }
  }
  return results;
}

nlohmann::json corpus_summary(const std::vector<EntryResult>& results) {
  nlohmann::json entries = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.ok()) ++failed;
    nlohmann::json verdicts = nlohmann::json::object();
    if (r.report.contains("verdicts"))
      for (const auto& [name, v] : r.report["verdicts"].items()) verdicts[name] = v["verdict"];
    entries.push_back({{"name", r.name},
                       {"ok", r.ok()},
                       {"input_digest", r.report.value("input_digest", "")},
                       {"status", r.report.value("status", "error")},
                       {"mismatches", r.mismatches},
                       {"verdicts", verdicts}});
  }
  return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"entries", entries},
          {"failed", failed},
          {"total", results.size()}};
}

}  // namespace eqss
