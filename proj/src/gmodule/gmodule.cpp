#include "eqss/gmodule.hpp"

#include <stdexcept>
#include <string>

namespace eqss {

GModule::GModule(Matrix action) : action_(std::move(action)) {
  if (action_.rows() != action_.cols()) throw std::invalid_argument("action matrix must be square");
  if (!action_.pow(action_.p()).is_identity()) {
    throw std::invalid_argument("action matrix does not satisfy t^p = 1");
  }
  // Over F_p, t^p - 1 = (t - 1)^p, so this is the same condition; checked anyway.
  if (!augmentation().pow(action_.p()).is_zero()) {
    throw std::invalid_argument("t - 1 is not nilpotent of order <= p");
  }
}

GModule GModule::trivial(Field field, std::size_t dim) {
  return GModule(Matrix::identity(field, dim));
}

GModule GModule::indecomposable(Field field, std::size_t d) {
  if (d == 0 || d > field.p()) {
    throw std::invalid_argument("V_d needs 1 <= d <= p, got d = " + std::to_string(d));
  }
  Matrix a = Matrix::identity(field, d);
  for (std::size_t j = 0; j + 1 < d; ++j) a(j + 1, j) = 1;
  return GModule(std::move(a));
}

GModule GModule::direct_sum(const std::vector<GModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  std::size_t n = 0;
  for (const auto& m : parts) n += m.dim();
  Matrix a(parts.front().field(), n, n);
  std::size_t off = 0;
  for (const auto& m : parts) {
    if (!(m.field() == parts.front().field())) throw std::invalid_argument("direct_sum over mixed fields");
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) a(off + r, off + c) = m.action()(r, c);
    off += m.dim();
  }
  return GModule(std::move(a));
}

GModule GModule::from_multiplicities(Field field, const std::map<std::size_t, std::size_t>& m) {
  std::vector<GModule> parts;
  for (const auto& [d, count] : m)
    for (std::size_t i = 0; i < count; ++i) parts.push_back(indecomposable(field, d));
  if (parts.empty()) return trivial(field, 0);
  return direct_sum(parts);
}

Matrix GModule::augmentation() const { return action_ - Matrix::identity(field(), dim()); }

Matrix GModule::norm() const {
  Matrix sum(field(), dim(), dim());
  Matrix power = Matrix::identity(field(), dim());
  for (std::uint32_t i = 0; i < p(); ++i) {
    sum = sum + power;
    power = power * action_;
  }
  return sum;
}

GModule GModule::conjugated(const Matrix& basis) const {
  if (basis.rows() != dim() || basis.cols() != dim() || rank(basis) != dim()) {
    throw std::invalid_argument("conjugation needs an invertible basis matrix");
  }
  // Columns of the inverse are solutions of basis * x = e_j.
  Matrix inv(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    std::vector<Elem> e(dim(), 0);
    e[j] = 1;
    const auto x = solve(basis, e);
    for (std::size_t i = 0; i < dim(); ++i) inv(i, j) = (*x)[i];
  }
  return GModule(inv * action_ * basis);
}

GModule GModule::with_generator_power(std::uint64_t a) const { return GModule(action_.pow(a)); }

std::size_t Decomposition::count(std::size_t d) const {
  const auto it = multiplicities.find(d);
  return it == multiplicities.end() ? 0 : it->second;
}

std::size_t Decomposition::dim() const {
  std::size_t total = 0;
  for (const auto& [d, m] : multiplicities) total += d * m;
  return total;
}

Decomposition decompose(const GModule& m) {
  const std::size_t p = m.p();
  // r[d] = rank (t-1)^d, d = 0..p+1
  std::vector<long long> r(p + 2, 0);
  r[0] = static_cast<long long>(m.dim());
  const Matrix a = m.augmentation();
  Matrix power = Matrix::identity(m.field(), m.dim());
  for (std::size_t d = 1; d <= p; ++d) {
    power = power * a;
    r[d] = static_cast<long long>(rank(power));
  }
  Decomposition out;
  for (std::size_t d = 1; d <= p; ++d) {
    const long long md = r[d - 1] - 2 * r[d] + r[d + 1];
    if (md < 0) {
      throw std::runtime_error("negative multiplicity for V_" + std::to_string(d) +
                               "; action matrix is inconsistent");
    }
    if (md > 0) out.multiplicities[d] = static_cast<std::size_t>(md);
  }
  if (out.dim() != m.dim()) throw std::logic_error("decomposition does not account for the dimension");
  return out;
}

GroupCohomology group_cohomology(const GModule& m, unsigned k) {
  const Matrix ta = m.augmentation();
  const Matrix n = m.norm();
  Matrix z;
  Matrix b;
  if (k == 0) {
    z = kernel_basis(ta);
    b = Matrix(m.field(), m.dim(), 0);
  } else if (k % 2 == 1) {
    z = kernel_basis(n);
    b = image_basis(ta);
  } else {
    z = kernel_basis(ta);
    b = image_basis(n);
  }
  GroupCohomology h;
  h.dim = subquotient_dim(z, b);
  h.basis = complement_columns(b, z);
  return h;
}

bool is_nice(const Decomposition& d, std::uint32_t p) {
  for (const auto& [dd, count] : d.multiplicities)
    if (count > 0 && dd != 1 && dd != p) return false;
  return true;
}

bool is_nice(const GModule& m) { return is_nice(decompose(m), m.p()); }

bool check_dual_pairing(const GModule& m, const GModule& m_prime, const Matrix& pairing) {
  if (pairing.rows() != m.dim() || pairing.cols() != m_prime.dim()) {
    throw std::invalid_argument("pairing must be dim(M) x dim(M')");
  }
  if (m.dim() != m_prime.dim() || rank(pairing) != m.dim()) return false;
  if (!(m.action().transpose() * pairing * m_prime.action() == pairing)) return false;
  if (!(decompose(m) == decompose(m_prime))) {
    throw std::logic_error("dual modules with different decompositions");
  }
  return true;
}

CohomologyProfile CohomologyProfile::from_modules(std::uint32_t p, std::vector<GModule> modules) {
  CohomologyProfile out;
  out.p = p;
  for (const auto& m : modules) {
    if (m.p() != p) throw std::invalid_argument("profile mixes characteristics");
    out.decompositions.push_back(decompose(m));
    const std::size_t t = group_cohomology(m, 2).dim;
    // For nice modules t^i is the number of trivial summands.
    if (is_nice(out.decompositions.back(), p) && t != out.decompositions.back().count(1)) {
      throw std::logic_error("t-invariant disagrees with the trivial summand count");
    }
    out.t.push_back(t);
  }
  out.modules = std::move(modules);
  return out;
}

int CohomologyProfile::top_degree() const {
  for (std::size_t i = modules.size(); i-- > 0;)
    if (modules[i].dim() > 0) return static_cast<int>(i);
  return -1;
}

bool CohomologyProfile::nice() const {
  for (const auto& d : decompositions)
    if (!is_nice(d, p)) return false;
  return true;
}

long long chi_t(const CohomologyProfile& profile) {
  long long s = 0;
  for (std::size_t i = 0; i < profile.t.size(); ++i)
    s += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(profile.t[i]);
  return s;
}

std::size_t t_sum(const CohomologyProfile& profile) { return t_tail(profile, 0); }

std::size_t t_tail(const CohomologyProfile& profile, std::size_t k) {
  std::size_t s = 0;
  for (std::size_t i = k; i < profile.t.size(); ++i) s += profile.t[i];
  return s;
}

nlohmann::json to_json(const GModule& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m.action()(r, c));
    rows.push_back(std::move(row));
  }
  return {{"p", m.p()}, {"dim", m.dim()}, {"action", std::move(rows)}};
}

nlohmann::json to_json(const Decomposition& d) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [dd, count] : d.multiplicities) j[std::to_string(dd)] = count;
  return j;
}

nlohmann::json to_json(const CohomologyProfile& profile) {
  nlohmann::json degrees = nlohmann::json::array();
  for (std::size_t i = 0; i < profile.modules.size(); ++i) {
    degrees.push_back({{"dim", profile.modules[i].dim()},
                       {"decomposition", to_json(profile.decompositions[i])},
                       {"t", profile.t[i]}});
  }
  return {{"p", profile.p}, {"degrees", std::move(degrees)}};
}

GModule gmodule_from_json(const nlohmann::json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const Field f(p);
  if (j.contains("decomposition")) {
    std::map<std::size_t, std::size_t> m;
    for (const auto& [key, value] : j.at("decomposition").items())
      m[std::stoul(key)] = value.get<std::size_t>();
    return GModule::from_multiplicities(f, m);
  }
  const auto rows = j.at("action").get<std::vector<std::vector<long long>>>();
  Matrix a = Matrix::from_rows(f, rows);
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != a.rows()) {
    throw std::invalid_argument("\"dim\" does not match the action matrix");
  }
  return GModule(std::move(a));
}

CohomologyProfile profile_from_json(const nlohmann::json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  std::vector<GModule> modules;
  for (auto degree : j.at("degrees")) {
    if (!degree.contains("p")) degree["p"] = p;
    modules.push_back(gmodule_from_json(degree));
  }
  return CohomologyProfile::from_modules(p, std::move(modules));
}

}  // namespace eqss
