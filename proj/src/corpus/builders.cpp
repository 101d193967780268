#include "eqss/builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eqss {
namespace {

// Polygon size and the vertex shift realizing the generator.
std::uint32_t polygon_size(std::uint32_t p) { return p == 2 ? 4 : p; }
std::uint32_t step(std::uint32_t p) { return p == 2 ? 2 : 1; }

void check_prime(std::uint32_t p) { (void)Field(p); }

std::vector<Simplex> polygon_edges(std::uint32_t m, std::uint32_t base) {
  std::vector<Simplex> edges;
  for (std::uint32_t i = 0; i < m; ++i) {
    Simplex e{base + i, base + (i + 1) % m};
    std::sort(e.begin(), e.end());
    edges.push_back(e);
  }
  return edges;
}

std::vector<std::uint32_t> rotation(std::uint32_t m, std::uint32_t shift, std::uint32_t base) {
  std::vector<std::uint32_t> g(m);
  for (std::uint32_t i = 0; i < m; ++i) g[i] = base + (i + shift) % m;
  return g;
}

}  // namespace

SimplicialGComplex build_point(std::uint32_t p) { return SimplicialGComplex(p, 1, {0}, {}); }

SimplicialGComplex build_circle(std::uint32_t p) {
  check_prime(p);
  const std::uint32_t m = polygon_size(p);
  return SimplicialGComplex(p, m, rotation(m, step(p), 0), polygon_edges(m, 0));
}

SimplicialGComplex build_trivial_circle(std::uint32_t p) {
  check_prime(p);
  const std::uint32_t m = std::max<std::uint32_t>(polygon_size(p), 3);
  return SimplicialGComplex(p, m, rotation(m, 0, 0), polygon_edges(m, 0));
}

SimplicialGComplex build_sphere_join(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  check_prime(p);
  if (a >= p || b >= p || (a == 0 && b == 0)) {
    throw std::invalid_argument("sphere_join needs 0 <= a, b < p, not both zero (got a = " +
                                std::to_string(a) + ", b = " + std::to_string(b) + ")");
  }
  const std::uint32_t m = polygon_size(p);
  std::vector<Simplex> first{{}};
  std::vector<Simplex> second{{}};
  for (std::uint32_t i = 0; i < m; ++i) {
    first.push_back({i});
    second.push_back({m + i});
  }
  for (const auto& e : polygon_edges(m, 0)) first.push_back(e);
  for (const auto& e : polygon_edges(m, m)) second.push_back(e);
  std::vector<Simplex> simplices;
  for (const auto& s : first)
    for (const auto& t : second) {
      if (s.size() + t.size() < 2) continue;
      Simplex u = s;
      u.insert(u.end(), t.begin(), t.end());
      simplices.push_back(u);
    }
  auto g = rotation(m, a * step(p), 0);
  const auto g2 = rotation(m, b * step(p), m);
  g.insert(g.end(), g2.begin(), g2.end());
  return SimplicialGComplex(p, 2 * m, std::move(g), simplices);
}

SimplicialGComplex build_suspension_sphere(std::uint32_t p) {
  check_prime(p);
  const std::uint32_t m = polygon_size(p);
  std::vector<Simplex> simplices;
  for (std::uint32_t i = 0; i < m; ++i) simplices.push_back({i, m}), simplices.push_back({i, m + 1});
  for (const auto& e : polygon_edges(m, 0)) {
    simplices.push_back(e);
    simplices.push_back({e[0], e[1], m});
    simplices.push_back({e[0], e[1], m + 1});
  }
  auto g = rotation(m, step(p), 0);
  g.push_back(m);
  g.push_back(m + 1);
  return SimplicialGComplex(p, m + 2, std::move(g), simplices);
}

SimplicialGComplex build_cone(std::uint32_t p) {
  check_prime(p);
  const std::uint32_t m = polygon_size(p);
  std::vector<Simplex> simplices;
  for (std::uint32_t i = 0; i < m; ++i) simplices.push_back({i, m});
  for (const auto& e : polygon_edges(m, 0)) {
    simplices.push_back(e);
    simplices.push_back({e[0], e[1], m});
  }
  auto g = rotation(m, step(p), 0);
  g.push_back(m);
  return SimplicialGComplex(p, m + 1, std::move(g), simplices);
}

SimplicialGComplex build_torus_rotation() {
  // Seven-vertex torus on Z/7 with x -> 2x; the fixed points are the vertex 0
  // and the barycenters of {1,2,4} and {3,5,6}.
  std::vector<Simplex> simplices;
  for (std::uint32_t i = 0; i < 7; ++i) {
    for (std::uint32_t d : {1u, 2u, 3u}) {
      Simplex e{i, (i + d) % 7};
      std::sort(e.begin(), e.end());
      simplices.push_back(e);
    }
    for (std::uint32_t d : {1u, 2u}) {
      Simplex t{i, (i + d) % 7, (i + 3) % 7};
      std::sort(t.begin(), t.end());
      simplices.push_back(t);
    }
  }
  std::vector<std::uint32_t> g(7);
  for (std::uint32_t i = 0; i < 7; ++i) g[i] = (2 * i) % 7;
  return SimplicialGComplex(3, 7, std::move(g), simplices);
}

CohomologyProfile build_mp_profile(std::uint32_t p) {
  const Field f(p);
  const std::size_t d = p - 1;
  std::vector<GModule> modules;
  modules.push_back(GModule::trivial(f, 1));
  modules.push_back(GModule::indecomposable(f, d));
  modules.push_back(GModule::indecomposable(f, d));
  modules.push_back(GModule::trivial(f, 1));
  return CohomologyProfile::from_modules(p, std::move(modules));
}

BettiData build_seifert_betti(std::size_t b, std::size_t s) {
  if (s == 0 || s > 1 + b || (s % 2) != ((1 + b) % 2)) {
    throw std::invalid_argument("no Seifert model with b = " + std::to_string(b) + " and s = " +
                                std::to_string(s));
  }
  BettiData d;
  d.n = 3;
  d.manifold = {1, b, b, 1};
  d.fixed = {s, s};
  d.circles = s;
  return d;
}

BettiData build_bredon_betti() {
  BettiData d;
  d.n = 17;
  d.manifold.assign(18, 0);
  for (int i : {0, 3, 5, 8, 9, 12, 14, 17}) d.manifold[i] = 1;
  d.fixed.assign(16, 0);
  for (int i : {0, 3, 5, 10, 12, 15}) d.fixed[i] = 1;
  return d;
}

}  // namespace eqss
