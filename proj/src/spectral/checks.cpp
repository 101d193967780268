#include "eqss/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace eqss {

void CheckResult::expect(bool condition, const std::string& what) {
  ++checked;
  if (!condition) failures.push_back(what);
}

void CheckResult::merge(const CheckResult& other) {
  checked += other.checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

std::string cell(int r, int k, int l) {
  std::ostringstream os;
  os << "E_" << r << "^{" << k << "," << l << "}";
  return os.str();
}

bool is_zero(const std::vector<Elem>& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

std::vector<Elem> add(const Field& f, std::vector<Elem> a, const std::vector<Elem>& b, Elem scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(scale, b[i]));
  return a;
}

}  // namespace

CheckResult check_e2_identification(const SpectralSequence& ss, const CohomologyProfile& profile) {
  CheckResult out;
  const int n = ss.n();
  for (int l = 0; l <= n; ++l) {
    if (static_cast<std::size_t>(l) >= profile.degrees()) {
      for (int k = 0; k <= ss.trusted_column(2); ++k)
        out.expect(ss.dim(2, k, l) == 0, cell(2, k, l) + " should vanish");
      continue;
    }
    // H^k is 2-periodic for k > 0, so three degrees cover every column.
    std::size_t expected[3];
    for (unsigned k = 0; k < 3; ++k) expected[k] = group_cohomology(profile.modules[l], k).dim;
    for (int k = 0; k <= ss.trusted_column(2); ++k) {
      const std::size_t want = k == 0 ? expected[0] : expected[k % 2 == 1 ? 1 : 2];
      const std::size_t got = ss.dim(2, k, l);
      out.expect(got == want, cell(2, k, l) + " = " + std::to_string(got) + ", H^" + std::to_string(k) +
                                  "(Z/p; H^" + std::to_string(l) + ") = " + std::to_string(want));
    }
  }
  return out;
}

CheckResult check_convergence(const SpectralSequence& ss, const std::vector<std::size_t>& tot_dims) {
  CheckResult out;
  const int r = ss.final_page();
  const int limit = std::min<int>(ss.trusted_total_degree(), static_cast<int>(tot_dims.size()) - 1);
  for (int s = 0; s <= limit; ++s) {
    std::size_t sum = 0;
    for (int l = 0; l <= std::min(s, ss.n()); ++l) sum += ss.dim(r, s - l, l);
    out.expect(sum == tot_dims[s], "total degree " + std::to_string(s) + ": E_" + std::to_string(r) +
                                       " gives " + std::to_string(sum) + ", H(Tot) gives " +
                                       std::to_string(tot_dims[s]));
  }
  return out;
}

CheckResult check_page_structure(const SpectralSequence& ss) {
  CheckResult out;
  const int n = ss.n();
  for (int r = 1; r <= ss.final_page(); ++r) {
    const int trusted = ss.trusted_column(r);
    for (int k = 0; k + r <= trusted; ++k) {
      for (int l = 0; l <= n; ++l) {
        const Matrix d = ss.differential(r, k, l);
        if (k + 2 * r <= trusted) {
          const Matrix d2 = ss.differential(r, k + r, l - r + 1);
          out.expect((d2 * d).is_zero(), "d_r d_r != 0 at " + cell(r, k, l));
        }
        const std::size_t in = k >= r ? rank(ss.differential(r, k - r, l + r - 1)) : 0;
        const std::size_t homology = d.cols() - rank(d) - in;
        out.expect(ss.dim(r + 1, k, l) == homology,
                   cell(r + 1, k, l) + " is not the homology of d_" + std::to_string(r));
      }
    }
    for (int k = r; k + 2 <= trusted; ++k)
      for (int l = 0; l <= n; ++l)
        out.expect(ss.dim(r, k, l) == ss.dim(r, k + 2, l), cell(r, k, l) + " is not 2-periodic in k");
  }
  return out;
}

long long doubled_page_euler(const SpectralSequence& ss, int r) {
  // Columns k0 and k0 + 1 are in the periodic range for page r.
  const int k0 = std::max(r, 1) + 1;
  long long total = 0;
  for (int k = k0; k <= k0 + 1; ++k)
    for (int l = 0; l <= ss.n(); ++l) {
      const long long d = static_cast<long long>(ss.dim(r, k, l));
      total += ((k + l) % 2 == 0) ? d : -d;
    }
  return total;
}

CheckResult check_euler_invariance(const SpectralSequence& ss) {
  CheckResult out;
  const long long base = doubled_page_euler(ss, 2);
  for (int r = 3; r <= ss.final_page(); ++r) {
    const long long v = doubled_page_euler(ss, r);
    out.expect(v == base, "Euler characteristic of E_" + std::to_string(r) + " is " + std::to_string(v) +
                              "/2, E_2 has " + std::to_string(base) + "/2");
  }
  return out;
}

bool check_zr(const SpectralSequence& ss) {
  for (int r = 2; r <= ss.final_page(); ++r)
    for (int k = 0; k + r <= ss.trusted_column(r); ++k)
      if (!ss.differential(r, k, r - 1).is_zero()) return false;
  return true;
}

bool check_condition_cond(const SpectralSequence& ss) {
  for (int r = 3; r <= ss.final_page(); r += 2)
    for (int k = ss.n(); k + r <= ss.trusted_column(r); ++k)
      for (int l = 0; l <= ss.n(); ++l)
        if (!ss.differential(r, k, l).is_zero()) return false;
  return true;
}

namespace {

struct Sampler {
  const SpectralSequence& ss;
  std::mt19937_64 rng;

  std::vector<Elem> random_class(int r, int k, int l) {
    std::uniform_int_distribution<std::uint32_t> value(0, ss.complex().base().p() - 1);
    std::vector<Elem> v(ss.dim(r, k, l));
    for (auto& x : v) x = static_cast<Elem>(value(rng));
    return v;
  }

  // A random element of Z_{r-1}^{k+1} + B_{r-1}^k.
  std::vector<Elem> random_denominator(int r, int k, int l) {
    const Field& f = ss.complex().base().field();
    const int s = k + l;
    std::vector<Elem> out(ss.complex().tot_dim(s), 0);
    std::uniform_int_distribution<std::uint32_t> value(0, f.p() - 1);
    for (const auto c : ss.denominator_cells(r, k, l)) {
      const Elem a = static_cast<Elem>(value(rng));
      if (a != 0) out = add(f, std::move(out), ss.basis_vector(s, c), a);
    }
    return out;
  }
};

}  // namespace

CheckResult check_product_laws(const SpectralSequence& ss, const ProductCheckOptions& opt) {
  CheckResult out;
  const int r = opt.page;
  const int n = ss.n();
  const int trusted = ss.trusted_column(r);
  const Field& f = ss.complex().base().field();
  const SwanDoubleComplex& dc = ss.complex();
  Sampler sampler{ss, std::mt19937_64(opt.seed)};

  // Unit class at (0, 0).
  const auto unit = ss.project(r, 0, 0, [&] {
    std::vector<Elem> u(dc.tot_dim(0), 0);
    const auto one = dc.base().unit();
    std::copy(one.begin(), one.end(), u.begin());
    return u;
  }());

  // Positions with nonzero classes that leave room for a differential.
  struct Pos {
    int k, l;
  };
  std::vector<Pos> cells;
  const int half = std::max(0, (trusted - r) / 2);
  for (int k = 0; k <= half; ++k)
    for (int l = 0; l <= n; ++l)
      if (ss.dim(r, k, l) > 0) cells.push_back({k, l});
  if (cells.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);

  for (std::size_t sample = 0; sample < opt.samples; ++sample) {
    const Pos a = cells[pick(sampler.rng)];
    const Pos b = cells[pick(sampler.rng)];
    const int k = a.k, l = a.l, k2 = b.k, l2 = b.l;
    const std::string where = cell(r, k, l) + " x " + cell(r, k2, l2);
    const auto x = sampler.random_class(r, k, l);
    const auto y = sampler.random_class(r, k2, l2);
    const auto xy = ss.product(r, k, l, x, k2, l2, y);

    out.expect(ss.product(r, 0, 0, unit, k, l, x) == x, "unit law fails on " + cell(r, k, l));

    // Representatives differing by denominators give the same class.
    if (l + l2 <= n) {
      const auto xr = add(f, ss.lift(r, k, l, x), sampler.random_denominator(r, k, l));
      const auto yr = add(f, ss.lift(r, k2, l2, y), sampler.random_denominator(r, k2, l2));
      const auto z = dc.tot_product(k + l, xr, k2 + l2, yr);
      out.expect(ss.project(r, k + k2, l + l2, z) == xy, "product depends on representatives at " + where);
    }

    if (r >= 2) {
      const auto yx = ss.product(r, k2, l2, y, k, l, x);
      const Elem sign = f.sign(static_cast<long long>(k + l) * (k2 + l2));
      std::vector<Elem> signed_yx(yx.size());
      for (std::size_t i = 0; i < yx.size(); ++i) signed_yx[i] = f.mul(sign, yx[i]);
      out.expect(xy == signed_yx, "graded commutativity fails at " + where);
    }

    // d_r(xy) = d_r(x) y + (-1)^{k+l} x d_r(y)
    if (l + l2 - r + 1 >= 0 && l + l2 <= n + r - 1) {
      const auto dxy = ss.differential(r, k + k2, l + l2).apply(xy);
      const auto dx = ss.differential(r, k, l).apply(x);
      const auto dy = ss.differential(r, k2, l2).apply(y);
      auto rhs = ss.product(r, k + r, l - r + 1, dx, k2, l2, y);
      const auto second = ss.product(r, k, l, x, k2 + r, l2 - r + 1, dy);
      rhs = add(f, std::move(rhs), second, f.sign(k + l));
      out.expect(dxy == rhs, "Leibniz rule fails for d_" + std::to_string(r) + " at " + where);
    }

    if (opt.odd_odd_vanishing && r == 2 && k % 2 == 1 && k2 % 2 == 1)
      out.expect(is_zero(xy), "odd-odd product is nonzero at " + where);
  }
  return out;
}

CheckResult check_swan_leibniz(const SwanDoubleComplex& dc, std::size_t samples, std::uint64_t seed) {
  CheckResult out;
  const Field& f = dc.base().field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> value(0, f.p() - 1);
  // Keep products and their differentials inside the window.
  const int smax = std::max(0, (dc.k_max() - 1) / 2);
  std::uniform_int_distribution<int> degree(0, std::min(smax, dc.max_total_degree()));
  auto random_element = [&](int s) {
    std::vector<Elem> v(dc.tot_dim(s));
    for (auto& x : v) x = static_cast<Elem>(value(rng));
    return v;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const int s = degree(rng), s2 = degree(rng);
    if (s + s2 + 1 > dc.k_max()) continue;
    const auto x = random_element(s);
    const auto y = random_element(s2);
    const auto lhs = dc.apply_differential(s + s2, dc.tot_product(s, x, s2, y));
    auto rhs = dc.tot_product(s + 1, dc.apply_differential(s, x), s2, y);
    rhs = add(f, std::move(rhs), dc.tot_product(s, x, s2 + 1, dc.apply_differential(s2, y)), f.sign(s));
    // The truncation drops column K + 1; compare below it.
    bool equal = true;
    for (const auto& b : dc.blocks(s + s2 + 1)) {
      if (b.k > dc.k_max() - 1) continue;
      for (std::size_t j = b.offset; j < b.offset + b.size; ++j) equal = equal && lhs[j] == rhs[j];
    }
    out.expect(equal, "Leibniz rule fails in total degrees " + std::to_string(s) + ", " + std::to_string(s2));
  }
  return out;
}

CheckResult check_localization(const std::vector<std::size_t>& whole, const std::vector<std::size_t>& fixed,
                               int n) {
  CheckResult out;
  const std::size_t limit = std::min(whole.size(), fixed.size());
  for (std::size_t s = static_cast<std::size_t>(n) + 1; s < limit; ++s)
    out.expect(whole[s] == fixed[s], "degree " + std::to_string(s) + ": " + std::to_string(whole[s]) + " vs " +
                                         std::to_string(fixed[s]) + " on the fixed set");
  return out;
}

std::vector<std::size_t> kunneth_dims(const std::vector<std::size_t>& betti, std::size_t count) {
  std::vector<std::size_t> out(count, 0);
  std::size_t running = 0;
  for (std::size_t s = 0; s < count; ++s) {
    if (s < betti.size()) running += betti[s];
    out[s] = running;
  }
  return out;
}

CheckResult check_free_oracle(const std::vector<std::size_t>& tot_dims, const std::vector<std::size_t>& quotient) {
  CheckResult out;
  for (std::size_t s = 0; s < tot_dims.size(); ++s) {
    const std::size_t want = s < quotient.size() ? quotient[s] : 0;
    out.expect(tot_dims[s] == want, "degree " + std::to_string(s) + ": H(Tot) = " + std::to_string(tot_dims[s]) +
                                        ", quotient has " + std::to_string(want));
  }
  return out;
}

}  // namespace eqss
