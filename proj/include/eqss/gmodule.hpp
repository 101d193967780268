#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqss/matrix.hpp"

namespace eqss {

/// A finite-dimensional F_p[Z/p]-module, given by the matrix of a chosen
/// generator t.
class GModule {
 public:
  /// Throws std::invalid_argument unless action is square with action^p = I.
  explicit GModule(Matrix action);

  static GModule trivial(Field field, std::size_t dim);
  /// V_d = F_p[t]/(t-1)^d as a single Jordan block with eigenvalue 1.
  static GModule indecomposable(Field field, std::size_t d);
  static GModule direct_sum(const std::vector<GModule>& parts);
  /// Direct sum of V_d's, multiplicities taken from the map d -> m_d.
  static GModule from_multiplicities(Field field, const std::map<std::size_t, std::size_t>& m);

  const Field& field() const noexcept { return action_.field(); }
  std::uint32_t p() const noexcept { return action_.p(); }
  std::size_t dim() const noexcept { return action_.rows(); }
  const Matrix& action() const noexcept { return action_; }

  /// t - 1
  Matrix augmentation() const;
  /// N = 1 + t + ... + t^{p-1}
  Matrix norm() const;

  /// The same module written in the basis given by the columns of `basis`.
  GModule conjugated(const Matrix& basis) const;
  /// Same underlying module, generator replaced by t^a.
  GModule with_generator_power(std::uint64_t a) const;

 private:
  Matrix action_;
};

/// m_d for d in [1, p]; only nonzero entries are stored.
struct Decomposition {
  std::map<std::size_t, std::size_t> multiplicities;

  std::size_t count(std::size_t d) const;
  std::size_t dim() const;
  bool operator==(const Decomposition&) const = default;
};

/// Throws std::runtime_error if some multiplicity comes out negative.
Decomposition decompose(const GModule& m);

struct GroupCohomology {
  std::size_t dim = 0;
  /// Representatives of a basis of the subquotient (columns).
  Matrix basis;
};

/// H^k(Z/p; M) from the 2-periodic standard resolution.
GroupCohomology group_cohomology(const GModule& m, unsigned k);

bool is_nice(const GModule& m);
bool is_nice(const Decomposition& d, std::uint32_t p);

/// The bilinear form b(x, y) = x^T P y between M and M'. Returns true iff it is
/// non-degenerate and b(tx, ty) = b(x, y); in that case it also checks that the
/// two decompositions agree and throws std::logic_error if they do not.
bool check_dual_pairing(const GModule& m, const GModule& m_prime, const Matrix& pairing);

/// Cohomology of a space degree by degree, each as a G-module.
struct CohomologyProfile {
  std::uint32_t p = 2;
  std::vector<GModule> modules;
  std::vector<Decomposition> decompositions;
  std::vector<std::size_t> t;  // t^i = dim H^2(Z/p; H^i)

  static CohomologyProfile from_modules(std::uint32_t p, std::vector<GModule> modules);

  std::size_t degrees() const noexcept { return modules.size(); }
  std::size_t betti(std::size_t i) const { return i < modules.size() ? modules[i].dim() : 0; }
  std::size_t t_at(std::size_t i) const { return i < t.size() ? t[i] : 0; }
  /// Highest degree with nonzero cohomology, or -1 if everything vanishes.
  int top_degree() const;
  bool nice() const;
};

long long chi_t(const CohomologyProfile& profile);
std::size_t t_sum(const CohomologyProfile& profile);
/// Sum over i >= 0 of t^{k+i}.
std::size_t t_tail(const CohomologyProfile& profile, std::size_t k);

// JSON: module {"p", "dim", "action"}; decomposition {"d": count};
// profile {"p", "degrees": [module | {"decomposition": {...}}]}.
nlohmann::json to_json(const GModule& m);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const CohomologyProfile& profile);
GModule gmodule_from_json(const nlohmann::json& j);
CohomologyProfile profile_from_json(const nlohmann::json& j);

}  // namespace eqss
