#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "eqss/exact.hpp"
#include "eqss/spectral.hpp"
#include "eqss/verdict.hpp"

namespace eqss {

/// Read-only access to one page E_r: dimensions, d_r and products, on the
/// columns 0..k_limit() where the data can be trusted.
class PageView {
 public:
  virtual ~PageView() = default;

  virtual int page() const = 0;
  virtual int n() const = 0;
  /// 0 for Q.
  virtual std::uint32_t characteristic() const = 0;
  virtual int k_limit() const = 0;
  virtual std::size_t dim(int k, int l) const = 0;
  /// d_r^{kl} as a dim(k+r, l-r+1) x dim(k, l) matrix.
  virtual ExactMatrix differential(int k, int l) const = 0;
  /// Product E^{kl} x E^{k2,l2} -> E^{k+k2,l+l2}: one matrix per target
  /// coordinate, rows indexed by the first factor. nullopt if unknown.
  virtual std::optional<std::vector<ExactMatrix>> product(int k, int l, int k2, int l2) const = 0;

  bool inside(int k) const { return k >= 0 && k <= k_limit(); }
};

/// A page of a computed spectral sequence. Products are evaluated on Tot
/// representatives and cached.
class SpectralPageView : public PageView {
 public:
  SpectralPageView(const SpectralSequence& ss, int r) : SpectralPageView(ss, r, ss.n()) {}
  /// n is the duality dimension, which may be below the dimension of the complex.
  SpectralPageView(const SpectralSequence& ss, int r, int n) : ss_(ss), r_(r), n_(n) {}

  int page() const override { return r_; }
  int n() const override { return n_; }
  std::uint32_t characteristic() const override { return ss_.complex().base().p(); }
  int k_limit() const override { return ss_.trusted_column(r_); }
  std::size_t dim(int k, int l) const override { return ss_.dim(r_, k, l); }
  ExactMatrix differential(int k, int l) const override;
  std::optional<std::vector<ExactMatrix>> product(int k, int l, int k2, int l2) const override;

 private:
  const SpectralSequence& ss_;
  int r_;
  int n_;
  mutable std::map<std::tuple<int, int, int, int>, std::vector<ExactMatrix>> cache_;
};

/// A page given directly as data (see synthetic_pages_from_json).
class SyntheticPage : public PageView {
 public:
  int page() const override { return r_; }
  int n() const override { return n_; }
  std::uint32_t characteristic() const override { return char_; }
  int k_limit() const override { return window_; }
  std::size_t dim(int k, int l) const override;
  ExactMatrix differential(int k, int l) const override;
  std::optional<std::vector<ExactMatrix>> product(int k, int l, int k2, int l2) const override;

  /// {"field_char", "n", "window", "dims": {"k,l": d}, "differentials":
  /// {"r": {"k,l": matrix}}, "products": {"(k,l)x(k2,l2)": [matrix, ...]}}.
  static SyntheticPage from_json(const nlohmann::json& j);

 private:
  int r_ = 2;
  int n_ = 0;
  std::uint32_t char_ = 0;
  int window_ = 0;
  std::map<std::pair<int, int>, std::size_t> dims_;
  std::map<std::pair<int, int>, ExactMatrix> differentials_;
  bool has_products_ = false;
  std::map<std::tuple<int, int, int, int>, std::vector<ExactMatrix>> products_;
};

/// A single page object, or {"pages": [page, ...]} for consecutive pages.
std::vector<SyntheticPage> synthetic_pages_from_json(const nlohmann::json& j);

enum class DualityVariant { kPD, kWPD, kSSPD };
std::string to_string(DualityVariant v);
DualityVariant parse_variant(const std::string& name);

struct PairingViolation {
  int k = 0, l = 0, k2 = 0, l2 = 0;
  std::size_t rows = 0, cols = 0, rank = 0;
  std::string reason;
  nlohmann::json to_json() const;
};

/// Non-degeneracy of E^{kl} x E^{k2,l2} -> E^{k+k2,n}; nullopt when fine.
std::optional<PairingViolation> pairing_violation(const PageView& page, int k, int l, int k2, int l2);

struct DualityFlag {
  bool holds = false;
  /// The threshold N used; for a failed search the one whose violations are listed.
  std::optional<int> threshold;
  int window_low = 0;   // first column constrained
  int window_high = 0;  // last trusted column
  std::size_t pairings_checked = 0;
  std::vector<PairingViolation> violations;
  std::vector<std::string> row_failures;
  nlohmann::json to_json() const;
};

/// The condition with a fixed threshold N on the trusted window.
DualityFlag check_duality_at(const PageView& page, DualityVariant variant, int n, int threshold);
/// Smallest N in the window for which the condition holds with at least one
/// pairing checked.
DualityFlag check_duality(const PageView& page, DualityVariant variant, int n);

struct PageDuality {
  int r = 0;
  DualityFlag pd, wpd, sspd;
};

/// Duality flags for each page; throws std::logic_error if sspd holds
/// without wpd on the same page.
std::vector<PageDuality> duality_report(const std::vector<const PageView*>& pages, int n);

struct AuditReport {
  bool applicable = false;
  std::size_t applications = 0;
  std::vector<std::string> violations;
  std::string detail;
  bool ok() const noexcept { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// Consecutive pages r, r+1: wherever page r has the non-degenerate pairings
/// of the propagation hypotheses, page r+1 must have E^{k+k',n} = K and a
/// non-degenerate pairing. Also the page-to-page persistence of pd, wpd (from
/// r = 2) and of sspd across even r. Needs condition (ZR).
AuditReport pd_propagation_audit(const std::vector<const PageView*>& pages, const std::vector<PageDuality>& flags,
                                 int n, bool zr);

/// Rank symmetries of d_r for large columns on pages satisfying pd or sspd.
AuditReport rank_symmetry_audit(const std::vector<const PageView*>& pages, const std::vector<PageDuality>& flags,
                                int n);

struct Mod4Audit {
  CongruenceVerdict verdict;
  std::size_t step_checks = 0;
  /// Skew-form evaluations: the d_r pairing at the middle row for odd n, the
  /// middle-row product form for even n.
  std::size_t skew_checks = 0;
  std::vector<std::string> failures;
};

/// Column sums mod 4 from E_2 to the last page at a large even column, the
/// per-page step, and the evenness of the skew forms.
Mod4Audit mod4_audit(const std::vector<const PageView*>& pages, const std::vector<PageDuality>& flags, int n);

}  // namespace eqss
