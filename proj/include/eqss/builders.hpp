#pragma once

#include <cstdint>
#include <vector>

#include "eqss/complex.hpp"
#include "eqss/gmodule.hpp"

namespace eqss {

/// Single vertex, trivial action.
SimplicialGComplex build_point(std::uint32_t p);
/// p-gon rotated one step (free); for p = 2 a square with the half-turn.
SimplicialGComplex build_circle(std::uint32_t p);
/// p-gon (square for p = 2) with the trivial action.
SimplicialGComplex build_trivial_circle(std::uint32_t p);
/// Join of two p-gons (squares for p = 2), an S^3, rotating the first by a
/// steps and the second by b steps.
SimplicialGComplex build_sphere_join(std::uint32_t p, std::uint32_t a, std::uint32_t b);
/// Suspension of the rotated p-gon: S^2 with the two poles fixed.
SimplicialGComplex build_suspension_sphere(std::uint32_t p);
/// Cone on the rotated p-gon: a disk with the apex fixed.
SimplicialGComplex build_cone(std::uint32_t p);
/// Seven-vertex torus with the order-3 rotation x -> 2x of Z/7; three fixed
/// points, H^1 = V_2 over F_3.
SimplicialGComplex build_torus_rotation();

/// H^0 = H^3 = V_1, H^1 = H^2 = V_{p-1}: the cohomology of M_p, a connected
/// sum of p - 1 copies of S^2 x S^1 with the permuting action.
CohomologyProfile build_mp_profile(std::uint32_t p);

/// Rational Betti numbers of a manifold and of the fixed set of an action.
struct BettiData {
  int n = 0;
  std::vector<std::size_t> manifold;
  std::vector<std::size_t> fixed;
  /// Number of fixed circles when the fixed set is a union of circles.
  std::size_t circles = 0;
};

/// Seifert-type S^1 action with b_1(M) = b and s fixed circles; requires
/// 0 < s <= 1 + b and s = 1 + b mod 2.
BettiData build_seifert_betti(std::size_t b, std::size_t s);
/// Circle action on S^3 x S^5 x S^9 with fixed set Betti numbers 1 in
/// degrees 0, 3, 5, 10, 12, 15.
BettiData build_bredon_betti();

}  // namespace eqss
