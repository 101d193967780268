#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "eqss/duality.hpp"
#include "eqss/io.hpp"

namespace eqss {

std::string to_string(DualityVariant v) {
  switch (v) {
    case DualityVariant::kPD: return "pd";
    case DualityVariant::kWPD: return "wpd";
    case DualityVariant::kSSPD: return "sspd";
  }
  return "?";
}

DualityVariant parse_variant(const std::string& name) {
  if (name == "pd") return DualityVariant::kPD;
  if (name == "wpd") return DualityVariant::kWPD;
  if (name == "sspd") return DualityVariant::kSSPD;
  throw InputError("unknown duality variant \"" + name + "\" (expected pd, wpd or sspd)");
}

nlohmann::json PairingViolation::to_json() const {
  return {{"k", k}, {"l", l}, {"k2", k2}, {"l2", l2}, {"rows", rows}, {"cols", cols}, {"rank", rank}, {"reason", reason}};
}

nlohmann::json DualityFlag::to_json() const {
  nlohmann::json j = {{"holds", holds},
                      {"threshold", threshold ? nlohmann::json(*threshold) : nlohmann::json(nullptr)},
                      {"window", {window_low, window_high}},
                      {"pairings_checked", pairings_checked}};
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : violations) v.push_back(x.to_json());
  j["violations"] = v;
  j["row_failures"] = row_failures;
  return j;
}

nlohmann::json AuditReport::to_json() const {
  return {{"applicable", applicable}, {"applications", applications}, {"violations", violations}, {"detail", detail}};
}

namespace {

std::string where(int k, int l) { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

bool nondegenerate(const PageView& page, int k, int l, int k2, int l2) {
  return !pairing_violation(page, k, l, k2, l2).has_value();
}

}  // namespace

std::optional<PairingViolation> pairing_violation(const PageView& page, int k, int l, int k2, int l2) {
  const std::size_t a = page.dim(k, l);
  const std::size_t b = page.dim(k2, l2);
  if (a == 0 && b == 0) return std::nullopt;
  PairingViolation v{k, l, k2, l2, a, b, 0, ""};
  if (a != b) {
    v.reason = "pairing is not square";
    return v;
  }
  if (page.dim(k + k2, page.n()) != 1) {
    v.reason = "target E^" + where(k + k2, page.n()) + " is not one-dimensional";
    return v;
  }
  const auto prod = page.product(k, l, k2, l2);
  if (!prod) {
    v.reason = "no product data";
    return v;
  }
  v.rank = prod->front().rank();
  if (v.rank != a) {
    v.reason = "pairing matrix is singular";
    return v;
  }
  return std::nullopt;
}

namespace {

bool pairing_selected(DualityVariant variant, int k, int k2, int threshold) {
  switch (variant) {
    case DualityVariant::kPD: return k >= threshold && k2 >= threshold && k % 2 == 0 && k2 % 2 == 0;
    case DualityVariant::kWPD: return k > threshold && k2 > threshold && (k + k2) % 2 == 1;
    case DualityVariant::kSSPD: return k > threshold && k2 > threshold && (k % 2 == 0 || k2 % 2 == 0);
  }
  return false;
}

}  // namespace

DualityFlag check_duality_at(const PageView& page, DualityVariant variant, int n, int threshold) {
  DualityFlag flag;
  flag.threshold = threshold;
  flag.window_low = variant == DualityVariant::kPD ? threshold : threshold + 1;
  flag.window_high = page.k_limit();
  const int hi = page.k_limit();

  for (int k = std::max(threshold + 1, 0); k <= hi; ++k) {
    const bool odd = k % 2 == 1;
    switch (variant) {
      case DualityVariant::kPD:
        if (odd) {
          for (int l = 0; l <= n; ++l)
            if (page.dim(k, l) != 0) flag.row_failures.push_back("E^" + where(k, l) + " is nonzero");
        } else {
          if (page.dim(k, 0) != 1) flag.row_failures.push_back("E^" + where(k, 0) + " is not one-dimensional");
          if (page.dim(k, n) != 1) flag.row_failures.push_back("E^" + where(k, n) + " is not one-dimensional");
        }
        break;
      case DualityVariant::kWPD:
        if (odd && page.dim(k, n) != 1) flag.row_failures.push_back("E^" + where(k, n) + " is not one-dimensional");
        break;
      case DualityVariant::kSSPD:
        if (page.dim(k, n) != 1) flag.row_failures.push_back("E^" + where(k, n) + " is not one-dimensional");
        break;
    }
  }

  for (int k = std::max(threshold, 0); k <= hi; ++k)
    for (int k2 = std::max(threshold, 0); k + k2 <= hi; ++k2) {
      if (!pairing_selected(variant, k, k2, threshold)) continue;
      ++flag.pairings_checked;
      for (int l = 0; l <= n; ++l)
        if (auto v = pairing_violation(page, k, l, k2, n - l)) flag.violations.push_back(*v);
    }
  flag.holds = flag.row_failures.empty() && flag.violations.empty();
  return flag;
}

DualityFlag check_duality(const PageView& page, DualityVariant variant, int n) {
  DualityFlag last;
  last.window_high = page.k_limit();
  bool tried = false;
  for (int threshold = 0; threshold <= page.k_limit(); ++threshold) {
    DualityFlag flag = check_duality_at(page, variant, n, threshold);
    if (flag.pairings_checked == 0) break;
    if (flag.holds) return flag;
    last = std::move(flag);
    tried = true;
  }
  if (!tried) last.row_failures.push_back("trusted window too small to test any pairing");
  last.holds = false;
  return last;
}

std::vector<PageDuality> duality_report(const std::vector<const PageView*>& pages, int n) {
  std::vector<PageDuality> out;
  for (const PageView* page : pages) {
    PageDuality d;
    d.r = page->page();
    d.pd = check_duality(*page, DualityVariant::kPD, n);
    d.wpd = check_duality(*page, DualityVariant::kWPD, n);
    d.sspd = check_duality(*page, DualityVariant::kSSPD, n);
    if (d.sspd.holds) {
      // The wpd conditions are a subset of the sspd ones at the same threshold.
      const DualityFlag implied = check_duality_at(*page, DualityVariant::kWPD, n, *d.sspd.threshold);
      if (!implied.holds) throw std::logic_error("sspd holds on E_" + std::to_string(d.r) + " but wpd does not");
      if (!d.wpd.holds) d.wpd = implied;
      const int t = *d.sspd.threshold + 1;
      for (int k = t + (t % 2); k <= page->k_limit(); k += 2)
        for (int k2 = t + (t % 2); k + k2 <= page->k_limit(); k2 += 2)
          for (int l = 0; l <= n; ++l)
            if (!nondegenerate(*page, k, l, k2, n - l))
              throw std::logic_error("sspd holds on E_" + std::to_string(d.r) + " but an even pairing degenerates");
    }
    out.push_back(std::move(d));
  }
  return out;
}

AuditReport pd_propagation_audit(const std::vector<const PageView*>& pages, const std::vector<PageDuality>& flags,
                                 int n, bool zr) {
  AuditReport out;
  if (!zr) {
    out.detail = "condition (ZR) fails; the propagation statements do not apply";
    return out;
  }
  out.applicable = true;
  for (std::size_t i = 0; i + 1 < pages.size(); ++i) {
    const PageView& cur = *pages[i];
    const PageView& next = *pages[i + 1];
    const int r = cur.page();
    if (next.page() != r + 1) continue;
    const int hi = next.k_limit();
    for (int k = 0; k <= hi; ++k)
      for (int k2 = 0; k + k2 <= hi; ++k2) {
        if (k + r > cur.k_limit() || k2 + r > cur.k_limit()) continue;
        if (cur.dim(k + k2, n) != 1 || cur.dim(k + k2, 0) != 1) continue;
        if (!nondegenerate(cur, k, n, k2, 0) || !nondegenerate(cur, k + r, n - r + 1, k2 - r, r - 1)) continue;
        for (int l = 0; l <= n; ++l) {
          const int l2 = n - l;
          if (!nondegenerate(cur, k, l, k2, l2) || !nondegenerate(cur, k + r, l - r + 1, k2 - r, l2 + r - 1) ||
              !nondegenerate(cur, k - r, l + r - 1, k2 + r, l2 - r + 1))
            continue;
          ++out.applications;
          std::ostringstream os;
          os << "E_" << r + 1 << ": pairing " << where(k, l) << " x " << where(k2, l2);
          if (next.dim(k + k2, n) != 1)
            out.violations.push_back(os.str() + ": target is not one-dimensional");
          else if (!nondegenerate(next, k, l, k2, l2))
            out.violations.push_back(os.str() + " degenerates");
        }
      }
  }
  // Persistence of the page conditions.
  if (!flags.empty() && flags.front().r == 2) {
    for (const auto& f : flags) {
      if (flags.front().pd.holds && !f.pd.holds)
        out.violations.push_back("pd holds on E_2 but not on E_" + std::to_string(f.r));
      if (flags.front().wpd.holds && !f.wpd.holds)
        out.violations.push_back("wpd holds on E_2 but not on E_" + std::to_string(f.r));
    }
  }
  for (std::size_t i = 0; i + 1 < flags.size(); ++i)
    if (flags[i].r % 2 == 0 && flags[i].sspd.holds && flags[i + 1].r == flags[i].r + 1 && !flags[i + 1].sspd.holds)
      out.violations.push_back("sspd holds on E_" + std::to_string(flags[i].r) + " but not on E_" +
                               std::to_string(flags[i].r + 1));
  return out;
}

AuditReport rank_symmetry_audit(const std::vector<const PageView*>& pages, const std::vector<PageDuality>& flags,
                                int n) {
  AuditReport out;
  for (std::size_t i = 0; i < pages.size() && i < flags.size(); ++i) {
    const PageView& page = *pages[i];
    const int r = page.page();
    const auto& f = flags[i];
    if (r < 2 || (!f.pd.holds && !f.sspd.holds)) continue;
    out.applicable = true;
    const int hi = page.k_limit();
    const bool use_pd = f.pd.holds;
    const int low = use_pd ? *f.pd.threshold + 1 : std::max(n, *f.sspd.threshold + 1);
    const int step = use_pd ? 2 : 1;
    const bool ranks = use_pd || r % 2 == 0;
    for (int k = low; k <= hi; ++k) {
      if (use_pd && k % 2 == 1) continue;
      for (int k2 = k; k2 <= hi; k2 += step) {
        for (int l = 0; l <= n; ++l) {
          ++out.applications;
          std::ostringstream os;
          os << "E_" << r << " columns " << k << ", " << k2 << ", row " << l;
          if (page.dim(k, l) != page.dim(k2, l)) out.violations.push_back(os.str() + ": dimensions differ");
          if (!ranks || k + r > hi || k2 + r > hi) continue;
          const std::size_t rk = page.differential(k, l).rank();
          if (rk != page.differential(k2, l).rank()) out.violations.push_back(os.str() + ": ranks of d_r differ");
          const int dual_row = n - l + r - 1;
          if (rk != page.differential(k2, dual_row).rank())
            out.violations.push_back(os.str() + ": rank d_r differs from row " + std::to_string(dual_row));
        }
      }
    }
  }
  if (!out.applicable) out.detail = "no page satisfies pd or sspd";
  return out;
}

namespace {

std::size_t column_sum(const PageView& page, int k, int n) {
  std::size_t s = 0;
  for (int l = 0; l <= n; ++l) s += page.dim(k, l);
  return s;
}

// Largest even k > low with k <= high, or -1.
int largest_even(int low, int high) {
  int k = high - (high % 2 + 2) % 2;
  return k > low ? k : -1;
}

ExactMatrix add_transpose(const ExactMatrix& m, bool subtract) {
  ExactMatrix out(m.characteristic(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.set(i, j, subtract ? Rational(m.at(i, j) - m.at(j, i)) : Rational(m.at(i, j) + m.at(j, i)));
  return out;
}

}  // namespace

Mod4Audit mod4_audit(const std::vector<const PageView*>& pages, const std::vector<PageDuality>& flags, int n) {
  Mod4Audit audit;
  CongruenceVerdict& v = audit.verdict;
  v.theorem = "mod_4";
  v.modulus = 4;
  v.relation = "congruent";
  if (pages.empty() || flags.size() != pages.size()) {
    v.hypotheses.push_back({"pages available", false, "no pages"});
    v.conclude(false);
    return audit;
  }
  const std::uint32_t ch = pages.front()->characteristic();
  v.hypotheses.push_back({"characteristic is not 2", ch != 2, "characteristic " + std::to_string(ch)});

  const bool all_pd = std::all_of(flags.begin(), flags.end(), [](const PageDuality& f) { return f.pd.holds; });
  const bool all_sspd = std::all_of(flags.begin(), flags.end(), [](const PageDuality& f) { return f.sspd.holds; });
  bool odd_zero = true;
  for (const PageView* p : pages) {
    if (p->page() % 2 == 0) continue;
    for (int k = 0; k + p->page() <= p->k_limit() && odd_zero; ++k)
      for (int l = 0; l <= n; ++l)
        if (!p->differential(k, l).is_zero()) odd_zero = false;
  }
  const bool duality = all_pd || (all_sspd && odd_zero);
  std::string ev = all_pd ? "pd on every page" : all_sspd ? (odd_zero ? "sspd on every page, odd d_r vanish"
                                                                       : "sspd on every page, but an odd d_r is nonzero")
                                                          : "neither pd nor sspd on every page";
  v.hypotheses.push_back({"pd, or sspd with vanishing odd differentials", duality, ev});

  int threshold = 0;
  for (const auto& f : flags) {
    const DualityFlag& d = all_pd ? f.pd : f.sspd;
    if (d.threshold) threshold = std::max(threshold, *d.threshold);
  }

  const PageView& e2 = *pages.front();
  bool rows_ok = true;
  std::string rows_ev = n % 2 == 0 ? "n is even" : "";
  if (n % 2 == 1) {
    for (int l = 2; l <= (n - 1) / 2; l += 2)
      for (int k = threshold + 1; k <= e2.k_limit(); ++k)
        if (e2.dim(k, l) != 0) {
          rows_ok = false;
          rows_ev = "E_2^" + where(k, l) + " is nonzero";
        }
    if (rows_ok) rows_ev = "E_2 vanishes in even rows 0 < l <= (n-1)/2";
  }
  v.hypotheses.push_back({"n even or even low rows vanish", rows_ok, rows_ev});

  const PageView& last = *pages.back();
  const int k_end = largest_even(threshold, last.k_limit());
  if (k_end < 0) {
    v.hypotheses.push_back({"large even column in the trusted window", false, "window too small"});
    v.conclude(false);
    return audit;
  }
  v.lhs = static_cast<long long>(column_sum(last, k_end, n));
  v.rhs = static_cast<long long>(column_sum(e2, k_end, n));
  v.notes.push_back("column k = " + std::to_string(k_end) + ", E_" + std::to_string(last.page()) + " against E_2");
  bool holds = (v.lhs - v.rhs) % 4 == 0;

  for (std::size_t i = 0; i + 1 < pages.size(); ++i) {
    ++audit.step_checks;
    const long long a = static_cast<long long>(column_sum(*pages[i], k_end, n));
    const long long b = static_cast<long long>(column_sum(*pages[i + 1], k_end, n));
    if ((a - b) % 4 != 0) {
      const std::string what = "column sums of E_" + std::to_string(pages[i]->page()) + " and E_" +
                               std::to_string(pages[i + 1]->page()) + " differ mod 4";
      if (v.hypotheses_hold()) {
        holds = false;
        audit.failures.push_back(what);
      } else {
        v.notes.push_back(what);
      }
    }
  }

  for (const PageView* p : pages) {
    const int r = p->page();
    if (n % 2 == 1) {
      // Psi(a, b) = d_r(a) . b on the row l0 with 2 l0 = n + r - 1.
      if ((n + r - 1) % 2 != 0) continue;
      const int l0 = (n + r - 1) / 2;
      if (l0 % 2 != 0 || l0 > n) continue;
      const int k = largest_even(duality ? threshold : 1, (p->k_limit() - r) / 2);
      if (k < 0) continue;
      ++audit.skew_checks;
      const std::size_t a = p->dim(k, l0);
      const ExactMatrix d = p->differential(k, l0);
      const auto prod = p->product(k + r, l0 - r + 1, k, l0);
      std::ostringstream os;
      os << "E_" << r << "^" << where(k, l0) << ": ";
      if (a == 0) continue;
      if (prod && prod->empty()) continue;
      if (!prod || prod->size() != 1) {
        if (!duality) continue;
        holds = false;
        audit.failures.push_back(os.str() + "no one-dimensional target for the skew form");
        continue;
      }
      const ExactMatrix psi = d.transpose() * prod->front();
      if (!add_transpose(psi, false).is_zero()) {
        holds = false;
        audit.failures.push_back(os.str() + "d_r pairing is not skew-symmetric");
      }
      const std::size_t rk = psi.rank();
      v.notes.push_back(os.str() + "skew form of rank " + std::to_string(rk));
      if ((ch != 2 && rk % 2 != 0) || (duality && rk != d.rank())) {
        holds = false;
        audit.failures.push_back(os.str() + "skew form has rank " + std::to_string(rk) + ", d_r has rank " +
                                 std::to_string(d.rank()));
      }
    } else {
      // Middle row: a . b = (-1)^{n/2} b . a on E^{k,n/2} for even k.
      const int m = n / 2;
      const int k = largest_even(duality ? threshold - 1 : 1, p->k_limit() / 2);
      if (k < 0) continue;
      ++audit.skew_checks;
      const std::size_t a = p->dim(k, m);
      if (a == 0) continue;
      const auto prod = p->product(k, m, k, m);
      std::ostringstream os;
      os << "E_" << r << "^" << where(k, m) << ": ";
      if (prod && prod->empty()) continue;
      if (!prod || prod->size() != 1) {
        if (!duality) continue;
        holds = false;
        audit.failures.push_back(os.str() + "no one-dimensional target for the middle form");
        continue;
      }
      const ExactMatrix& b = prod->front();
      const bool skew = m % 2 == 1;
      if (!add_transpose(b, !skew).is_zero()) {
        holds = false;
        audit.failures.push_back(os.str() + "middle form has the wrong symmetry");
      }
      v.notes.push_back(os.str() + (skew ? "skew" : "symmetric") + " middle form of rank " +
                        std::to_string(b.rank()));
      if (skew && ch != 2 && b.rank() % 2 != 0) {
        holds = false;
        audit.failures.push_back(os.str() + "skew middle form has odd rank " + std::to_string(b.rank()));
      }
    }
  }
  v.notes.push_back(std::to_string(audit.step_checks) + " page steps, " + std::to_string(audit.skew_checks) +
                    " skew-form checks");
  for (const auto& f : audit.failures) v.notes.push_back(f);
  v.conclude(holds);
  return audit;
}

}  // namespace eqss
