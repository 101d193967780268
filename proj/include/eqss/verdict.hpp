#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace eqss {

enum class Verdict { kPass, kFail, kNotApplicable };

std::string to_string(Verdict v);

struct Hypothesis {
  std::string name;
  bool pass = false;
  std::string evidence;
};

/// Result of a theorem validator. A failed hypothesis always yields
/// not-applicable; otherwise the verdict is whether the relation holds.
struct CongruenceVerdict {
  std::string theorem;
  std::vector<Hypothesis> hypotheses;
  long long lhs = 0;
  long long rhs = 0;
  /// 0 when the relation is not a congruence.
  long long modulus = 0;
  /// "congruent", "equal", "at most" or a short description.
  std::string relation;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::kNotApplicable;

  bool hypotheses_hold() const;
  /// Sets verdict from the hypotheses and whether the relation holds.
  void conclude(bool relation_holds);
  nlohmann::json to_json() const;
};

}  // namespace eqss
