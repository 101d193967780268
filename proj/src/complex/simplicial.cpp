#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "eqss/complex.hpp"

namespace eqss {
namespace {

std::string show(const Simplex& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

}  // namespace

SimplicialGComplex::SimplicialGComplex(std::uint32_t p, std::size_t vertex_count,
                                       std::vector<std::uint32_t> generator,
                                       const std::vector<Simplex>& simplices)
    : p_(Field(p).p()), generator_(std::move(generator)) {
  if (generator_.size() != vertex_count) {
    throw InputError("generator has " + std::to_string(generator_.size()) + " entries, expected " +
                     std::to_string(vertex_count));
  }
  std::vector<bool> hit(vertex_count, false);
  for (auto v : generator_) {
    if (v >= vertex_count || hit[v]) throw InputError("generator is not a permutation of the vertices");
    hit[v] = true;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::uint32_t w = static_cast<std::uint32_t>(v);
    for (std::uint32_t i = 0; i < p_; ++i) w = generator_[w];
    if (w != v) throw InputError("generator order does not divide p = " + std::to_string(p_));
  }

  std::vector<std::vector<Simplex>> dims;
  auto put = [&](const Simplex& s) {
    if (dims.size() < s.size()) dims.resize(s.size());
    dims[s.size() - 1].push_back(s);
  };
  for (std::uint32_t v = 0; v < vertex_count; ++v) put({v});
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const Simplex& s = simplices[i];
    if (s.empty()) throw InputError("empty simplex", 0, 0, i);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] >= vertex_count) {
        throw InputError("simplex " + show(s) + " uses vertex " + std::to_string(s[j]) +
                             " out of range",
                         0, 0, i);
      }
      if (j > 0 && s[j] <= s[j - 1]) {
        throw InputError("simplex " + show(s) + " is not strictly increasing", 0, 0, i);
      }
    }
    put(s);
  }
  for (auto& level : dims) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  by_dim_ = std::move(dims);

  auto present = [&](const Simplex& s) {
    const auto& level = by_dim_[s.size() - 1];
    return std::binary_search(level.begin(), level.end(), s);
  };
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const Simplex& s = simplices[i];
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      if (!present(face)) {
        throw InputError("face " + show(face) + " of simplex " + show(s) + " is missing", 0, 0, i);
      }
    }
  }
  for (const auto& level : by_dim_)
    for (const auto& s : level)
      if (!present(image(s))) {
        throw InputError("generator maps simplex " + show(s) + " to " + show(image(s)) +
                         ", which is not a simplex");
      }
}

std::size_t SimplicialGComplex::cell_count() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

std::size_t SimplicialGComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) throw std::out_of_range("no such simplex " + show(s));
  const auto& level = by_dim_[s.size() - 1];
  const auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) throw std::out_of_range("no such simplex " + show(s));
  return static_cast<std::size_t>(it - level.begin());
}

Simplex SimplicialGComplex::image(const Simplex& s) const {
  Simplex out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = generator_[s[i]];
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialGComplex::order_compatible() const {
  for (const auto& level : by_dim_)
    for (const auto& s : level)
      for (std::size_t i = 1; i < s.size(); ++i)
        if (generator_[s[i - 1]] >= generator_[s[i]]) return false;
  return true;
}

bool SimplicialGComplex::regular() const {
  // p is prime, so a simplex fixed setwise by some g != 1 is fixed setwise by
  // the generator; checking the generator alone suffices.
  for (const auto& level : by_dim_)
    for (const auto& s : level) {
      if (image(s) != s) continue;
      for (auto v : s)
        if (generator_[v] != v) return false;
    }
  return true;
}

bool SimplicialGComplex::trivial_action() const {
  for (std::size_t v = 0; v < generator_.size(); ++v)
    if (generator_[v] != v) return false;
  return true;
}

long long SimplicialGComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
  return chi;
}

namespace {

// Position of the `item`-th element of the top-level "simplices" array.
std::pair<std::size_t, std::size_t> locate_simplex(const std::string& text, std::size_t item) {
  const std::size_t key = text.find("\"simplices\"");
  if (key == std::string::npos) return {0, 0};
  std::size_t i = text.find('[', key);
  if (i == std::string::npos) return {0, 0};
  int depth = 0;
  std::size_t seen = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '[') {
      ++depth;
      if (depth == 2) {
        if (seen == item) break;
        ++seen;
      }
    } else if (ch == ']') {
      if (--depth == 0) return {0, 0};
    }
  }
  if (i >= text.size()) return {0, 0};
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t j = 0; j < i; ++j) {
    if (text[j] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

SimplicialGComplex complex_from_json(const std::string& text) {
  const nlohmann::json j = parse_json_text(text);
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto n = j.at("vertices").get<std::size_t>();
    auto generator = j.at("generator").get<std::vector<std::uint32_t>>();
    const auto simplices = j.at("simplices").get<std::vector<Simplex>>();
    try {
      return SimplicialGComplex(p, n, std::move(generator), simplices);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  } catch (const InputError& e) {
    if (e.item() == InputError::kNoItem) throw;
    const auto [line, column] = locate_simplex(text, e.item());
    throw InputError(std::string(e.what()) + " (line " + std::to_string(line) + ")", line, column,
                     e.item());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid complex description: ") + e.what());
  }
}

nlohmann::json to_json(const SimplicialGComplex& k) {
  nlohmann::json simplices = nlohmann::json::array();
  for (int d = 1; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(static_cast<std::size_t>(d))) simplices.push_back(s);
  return {{"p", k.p()},
          {"vertices", k.vertex_count()},
          {"generator", k.generator()},
          {"simplices", std::move(simplices)}};
}

SimplicialGComplex barycentric_subdivision(const SimplicialGComplex& k) {
  const int top = k.dimension();
  std::vector<std::uint32_t> offset(static_cast<std::size_t>(std::max(top, 0)) + 2, 0);
  for (int d = 0; d <= top; ++d) offset[d + 1] = offset[d] + static_cast<std::uint32_t>(k.count(d));
  const std::uint32_t n_vertices = offset[static_cast<std::size_t>(top + 1)];

  // chains[d][i]: all chains of faces ending at simplex i of dimension d.
  std::vector<std::vector<std::vector<Simplex>>> chains(static_cast<std::size_t>(top + 1));
  std::vector<Simplex> all;
  for (int d = 0; d <= top; ++d) {
    const auto& level = k.simplices(d);
    chains[d].resize(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Simplex& s = level[i];
      const std::uint32_t self = offset[d] + static_cast<std::uint32_t>(i);
      auto& mine = chains[d][i];
      mine.push_back({self});
      const std::size_t m = s.size();
      if (m > 24) throw std::invalid_argument("simplex dimension too large to subdivide");
      for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        Simplex face;
        for (std::size_t b = 0; b < m; ++b)
          if (mask & (1u << b)) face.push_back(s[b]);
        const std::size_t fd = face.size() - 1;
        for (const auto& c : chains[fd][k.index_of(face)]) {
          Simplex longer = c;
          longer.push_back(self);
          mine.push_back(std::move(longer));
        }
      }
      for (const auto& c : mine)
        if (c.size() > 1) all.push_back(c);
    }
  }

  std::vector<std::uint32_t> generator(n_vertices);
  for (int d = 0; d <= top; ++d) {
    const auto& level = k.simplices(d);
    for (std::size_t i = 0; i < level.size(); ++i)
      generator[offset[d] + i] = offset[d] + static_cast<std::uint32_t>(k.index_of(k.image(level[i])));
  }
  return SimplicialGComplex(k.p(), n_vertices, std::move(generator), all);
}

SimplicialGComplex validate_and_regularize(const SimplicialGComplex& k) {
  if (k.order_compatible() && k.regular()) return k;
  SimplicialGComplex once = barycentric_subdivision(k);
  if (once.order_compatible() && once.regular()) return once;
  SimplicialGComplex twice = barycentric_subdivision(once);
  if (twice.order_compatible() && twice.regular()) return twice;
  throw std::logic_error("action is still irregular after two barycentric subdivisions");
}

SimplicialGComplex fixed_subcomplex(const SimplicialGComplex& k) {
  std::vector<std::uint32_t> new_index(k.vertex_count(), UINT32_MAX);
  std::uint32_t next = 0;
  for (std::size_t v = 0; v < k.vertex_count(); ++v)
    if (k.generator()[v] == v) new_index[v] = next++;
  std::vector<Simplex> simplices;
  for (int d = 1; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) {
      Simplex t;
      for (auto v : s) {
        if (new_index[v] == UINT32_MAX) break;
        t.push_back(new_index[v]);
      }
      if (t.size() == s.size()) simplices.push_back(std::move(t));
    }
  std::vector<std::uint32_t> identity(next);
  std::iota(identity.begin(), identity.end(), 0u);
  return SimplicialGComplex(k.p(), next, std::move(identity), simplices);
}

}  // namespace eqss
