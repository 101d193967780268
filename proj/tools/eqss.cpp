#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqss/analysis.hpp"
#include "eqss/corpus.hpp"
#include "eqss/io.hpp"

using namespace eqss;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInputError = 2 };

struct Output {
  std::string format = "json";
  bool text() const { return format == "text"; }
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string verdict_text(const nlohmann::json& v) {
  std::ostringstream os;
  os << v["theorem"].get<std::string>() << ": " << v["verdict"].get<std::string>() << " (" << v["lhs"] << " "
     << v["relation"].get<std::string>() << " " << v["rhs"];
  if (v["modulus"].get<long long>() > 0) os << " mod " << v["modulus"];
  os << ")\n";
  for (const auto& h : v["hypotheses"])
    os << "  [" << (h["pass"].get<bool>() ? "ok" : "no") << "] " << h["name"].get<std::string>() << ": "
       << h["evidence"].get<std::string>() << "\n";
  for (const auto& n : v["notes"]) os << "  " << n.get<std::string>() << "\n";
  return os.str();
}

int cmd_decompose(const std::string& path, const Output& out) {
  const GModule m = gmodule_from_json(parse_json_text(read_text_file(path)));
  const Decomposition d = decompose(m);
  nlohmann::json coh = nlohmann::json::array();
  for (unsigned k = 0; k <= 2; ++k) coh.push_back(group_cohomology(m, k).dim);
  const nlohmann::json j = {{"p", m.p()},
                            {"dim", m.dim()},
                            {"decomposition", to_json(d)},
                            {"nice", is_nice(d, m.p())},
                            {"group_cohomology_dims", coh}};
  if (out.text()) {
    std::cout << "F_" << m.p() << "[Z/" << m.p() << "]-module of dimension " << m.dim() << ":";
    for (const auto& [size, count] : d.multiplicities) std::cout << " V_" << size << "^" << count;
    std::cout << (j["nice"].get<bool>() ? "  (nice)" : "  (not nice)") << "\n";
    std::cout << "dim H^0, H^1, H^2 = " << coh[0] << ", " << coh[1] << ", " << coh[2] << "\n";
  } else {
    print_json(j);
  }
  return kOk;
}

int cmd_analyze(const std::string& path, const AnalysisOptions& options, const Output& out) {
  const std::string text = read_text_file(path);
  const nlohmann::json doc = parse_json_text(text);
  nlohmann::json report;
  if (document_kind(doc) == EntryKind::kSimplicial)
    report = analyze_complex(complex_from_json(text), options).report;
  else
    report = analyze_document(doc, options);
  if (out.text())
    std::cout << render_text(report);
  else
    print_json(report);
  return report["status"] == "ok" ? kOk : kFailed;
}

int cmd_check_pd(const std::string& path, int n, const std::optional<std::string>& variant_name,
                 const AnalysisOptions& options, const Output& out) {
  const std::string text = read_text_file(path);
  const nlohmann::json doc = parse_json_text(text);
  std::optional<DualityVariant> variant;
  if (variant_name) variant = parse_variant(*variant_name);

  std::vector<SyntheticPage> synthetic;
  std::unique_ptr<CochainComplex> cochains;
  std::unique_ptr<SwanDoubleComplex> dc;
  std::unique_ptr<SpectralSequence> ss;
  std::vector<std::unique_ptr<SpectralPageView>> views;
  std::vector<const PageView*> pages;
  if (doc.is_object() && doc.contains("simplices")) {
    const SimplicialGComplex k = validate_and_regularize(complex_from_json(text));
    cochains = std::make_unique<CochainComplex>(CellComplex::from_simplicial(k));
    const int top = std::max(cochains->top_degree(), 0);
    dc = std::make_unique<SwanDoubleComplex>(*cochains, options.kmax.value_or(SwanDoubleComplex::default_window(top)));
    ss = std::make_unique<SpectralSequence>(*dc);
    const int rmax = std::max(options.rmax.value_or(std::max(5, ss->final_page())), 2);
    for (int r = 2; r <= rmax; ++r) {
      views.push_back(std::make_unique<SpectralPageView>(*ss, r, n));
      pages.push_back(views.back().get());
    }
  } else {
    synthetic = synthetic_pages_from_json(doc);
    if (synthetic.front().n() != n)
      throw InputError("--n " + std::to_string(n) + " does not match the page's n = " +
                       std::to_string(synthetic.front().n()));
    for (const auto& p : synthetic) pages.push_back(&p);
  }

  nlohmann::json result = nlohmann::json::array();
  bool failed = false;
  for (const PageView* page : pages) {
    nlohmann::json entry = {{"r", page->page()}, {"window", page->k_limit()}};
    for (DualityVariant v : {DualityVariant::kPD, DualityVariant::kWPD, DualityVariant::kSSPD}) {
      if (variant && v != *variant) continue;
      const DualityFlag f = check_duality(*page, v, n);
      entry[to_string(v)] = f.to_json();
      if (variant && !f.holds) failed = true;
    }
    result.push_back(entry);
  }
  // Consistency between the variants on each page.
  if (!variant) (void)duality_report(pages, n);

  const nlohmann::json report = {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                                 {"input_digest", "sha256:" + sha256_hex(doc.dump())},
                                 {"n", n},
                                 {"pages", result}};
  if (out.text()) {
    for (const auto& e : result) {
      std::cout << "E_" << e["r"] << " (columns <= " << e["window"] << "):";
      for (const char* name : {"pd", "wpd", "sspd"}) {
        if (!e.contains(name)) continue;
        const auto& f = e[name];
        std::cout << " " << name << " " << (f["holds"].get<bool>() ? "yes" : "no");
        if (!f["threshold"].is_null()) std::cout << " (N=" << f["threshold"] << ")";
      }
      std::cout << "\n";
      for (const char* name : {"pd", "wpd", "sspd"}) {
        if (!e.contains(name) || e[name]["holds"].get<bool>()) continue;
        for (const auto& v : e[name]["violations"])
          std::cout << "  " << name << ": (" << v["k"] << "," << v["l"] << ")x(" << v["k2"] << "," << v["l2"]
                    << ") " << v["rows"] << "x" << v["cols"] << " rank " << v["rank"] << ": "
                    << v["reason"].get<std::string>() << "\n";
        for (const auto& r : e[name]["row_failures"]) std::cout << "  " << name << ": " << r.get<std::string>() << "\n";
      }
    }
  } else {
    print_json(report);
  }
  return failed ? kFailed : kOk;
}

int cmd_verify(const std::string& theorem, const std::string& path, std::optional<std::size_t> circles,
               std::optional<std::size_t> points, const AnalysisOptions& options, const Output& out) {
  const std::string text = read_text_file(path);
  const nlohmann::json doc = parse_json_text(text);
  const EntryKind kind = document_kind(doc);
  std::optional<CongruenceVerdict> v;

  if (theorem == "torus" || (kind == EntryKind::kBetti && theorem == "lemma-2n")) {
    if (kind != EntryKind::kBetti) throw InputError("--theorem " + theorem + " needs Betti data");
    BettiData d = betti_from_json(doc);
    if (circles) d.circles = *circles;
    v = theorem == "torus" ? verify_torus(d) : verify_lemma_2n(d.manifold, d.n);
  } else {
    ProfileInput in;
    if (kind == EntryKind::kBetti) throw InputError("--theorem " + theorem + " needs a complex or a profile");
    if (kind == EntryKind::kSimplicial) {
      AnalysisOptions light = options;
      light.product_samples = 0;
      const ComplexAnalysis a = analyze_complex(complex_from_json(text), light);
      in.data = a.zp_data;
      in.closed = a.poincare;
      if (a.fixed.circles_only) in.circles = a.fixed.circles;
      if (a.fixed.finite) in.fixed_points = a.fixed.points;
    } else {
      in = profile_input_from_json(doc);
    }
    if (circles) in.circles = *circles;
    if (points) in.fixed_points = *points;
    if (theorem == "zp") v = verify_theorem_zp(in.data);
    else if (theorem == "zp-fp") v = verify_theorem_zp_fp(in.data);
    else if (theorem == "chi-t") v = verify_chi_t(in.data);
    else if (theorem == "t-inequality") v = verify_t_inequalities(in.data);
    else if (theorem == "sokolov") {
      if (!in.circles) throw InputError("sokolov needs the number of fixed circles (--circles)");
      v = verify_sokolov(in.data, *in.circles);
    } else if (theorem == "bryan") {
      if (!in.fixed_points) throw InputError("bryan needs the number of fixed points (--fixed-points)");
      v = verify_bryan(in.data, *in.fixed_points, in.closed);
    } else if (theorem == "lemma-2n") {
      std::vector<std::size_t> b;
      for (std::size_t i = 0; i < in.data.manifold.degrees(); ++i) b.push_back(in.data.manifold.betti(i));
      v = verify_lemma_2n(b, in.data.n);
    }
  }
  nlohmann::json j = v->to_json();
  j["input_digest"] = "sha256:" + sha256_hex(doc.dump());
  if (out.text())
    std::cout << verdict_text(j);
  else
    print_json(j);
  return v->verdict == Verdict::kFail ? kFailed : kOk;
}

int cmd_corpus_list(const Output& out) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : corpus())
    list.push_back({{"name", e.name}, {"kind", to_string(e.kind)}, {"description", e.description},
                    {"expectations", e.expectations.size()}});
  if (out.text()) {
    for (const auto& e : list)
      std::cout << e["name"].get<std::string>() << "  [" << e["kind"].get<std::string>() << "]  "
                << e["description"].get<std::string>() << "\n";
  } else {
    print_json(list);
  }
  return kOk;
}

int cmd_corpus_run(const std::optional<std::string>& name, bool full, const AnalysisOptions& options,
                   const Output& out) {
  std::vector<const CorpusEntry*> entries;
  if (name) {
    entries.push_back(&corpus_entry(*name));
  } else {
    for (const auto& e : corpus()) entries.push_back(&e);
  }
  const auto results = run_corpus(entries, options);
  nlohmann::json summary = corpus_summary(results);
  if (full) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : results) reports.push_back(r.report);
    summary["reports"] = reports;
  }
  if (out.text()) {
    for (const auto& r : results) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name;
      if (r.report.contains("verdicts")) {
        std::cout << "  ";
        for (const auto& [theorem, v] : r.report["verdicts"].items())
          std::cout << " " << theorem << "=" << v["verdict"].get<std::string>();
      }
      std::cout << "\n";
      for (const auto& m : r.mismatches) std::cout << "  " << m << "\n";
      if (full) std::cout << render_text(r.report);
    }
    std::cout << summary["total"].get<std::size_t>() - summary["failed"].get<std::size_t>() << "/" << summary["total"]
              << " entries pass\n";
  } else {
    print_json(summary);
  }
  return summary["failed"].get<std::size_t>() == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant cohomology spectral sequences of Z/p actions"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  AnalysisOptions options;
  int threads = 0;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", threads, "OpenMP threads (default: THREADS or the runtime default)");

  auto add_window = [&](CLI::App* cmd) {
    cmd->add_option("--kmax", options.kmax, "Swan column window K (default 2n + 16)");
    cmd->add_option("--rmax", options.rmax, "Last page examined (default max(5, n + 2))");
  };

  std::string path;
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a module into V_i summands");
  decompose_cmd->add_option("module", path, "Module JSON")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for a complex, profile or Betti data");
  analyze_cmd->add_option("input", path, "Input JSON")->required();
  add_window(analyze_cmd);
  analyze_cmd->add_option("--samples", options.product_samples, "Random product evaluations per page");
  analyze_cmd->add_option("--seed", options.seed, "Seed for the product checks");

  int pd_n = 0;
  std::optional<std::string> variant;
  auto* pd_cmd = app.add_subcommand("check-pd", "Duality conditions on pages");
  pd_cmd->add_option("input", path, "Synthetic page JSON or complex JSON")->required();
  pd_cmd->add_option("--n", pd_n, "Fiber dimension n")->required();
  pd_cmd->add_option("--variant", variant, "pd, wpd or sspd")->check(CLI::IsMember({"pd", "wpd", "sspd"}));
  add_window(pd_cmd);

  std::string theorem;
  std::optional<std::size_t> circles, points;
  auto* verify_cmd = app.add_subcommand("verify", "Run one theorem validator");
  verify_cmd->add_option("--theorem", theorem, "Validator")
      ->required()
      ->check(CLI::IsMember({"zp", "zp-fp", "chi-t", "t-inequality", "torus", "bryan", "sokolov", "lemma-2n"}));
  verify_cmd->add_option("input", path, "Complex, profile or Betti JSON")->required();
  verify_cmd->add_option("--circles", circles, "Number of fixed circles");
  verify_cmd->add_option("--fixed-points", points, "Number of fixed points");
  add_window(verify_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in examples");
  corpus_cmd->require_subcommand(1);
  corpus_cmd->fallthrough();
  corpus_cmd->add_subcommand("list", "List the entries");
  std::optional<std::string> entry_name;
  bool full = false;
  auto* run_cmd = corpus_cmd->add_subcommand("run", "Run entries and compare with their expected results");
  run_cmd->add_option("name", entry_name, "Entry to run (default: all)");
  run_cmd->add_flag("--full", full, "Include the full reports");
  run_cmd->add_option("--samples", options.product_samples, "Random product evaluations per page");
  std::string show_name;
  auto* show_cmd = corpus_cmd->add_subcommand("show", "Print the input document of an entry");
  show_cmd->add_option("name", show_name, "Entry")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (threads <= 0) {
    if (const char* env = std::getenv("THREADS")) threads = std::atoi(env);
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (*decompose_cmd) return cmd_decompose(path, out);
    if (*analyze_cmd) return cmd_analyze(path, options, out);
    if (*pd_cmd) return cmd_check_pd(path, pd_n, variant, options, out);
    if (*verify_cmd) return cmd_verify(theorem, path, circles, points, options, out);
    if (*corpus_cmd) {
      if (*run_cmd) return cmd_corpus_run(entry_name, full, options, out);
      if (*show_cmd) {
        std::cout << corpus_entry(show_name).input().dump(2) << "\n";
        return kOk;
      }
      return cmd_corpus_list(out);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
