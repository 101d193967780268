#include <cstdio>
#include <string>

#include "eqss/duality.hpp"
#include "eqss/io.hpp"

namespace eqss {

ExactMatrix SpectralPageView::differential(int k, int l) const {
  return ExactMatrix::from_fp(ss_.differential(r_, k, l));
}

std::optional<std::vector<ExactMatrix>> SpectralPageView::product(int k, int l, int k2, int l2) const {
  if (!inside(k) || !inside(k2) || !inside(k + k2)) return std::nullopt;
  const auto key = std::make_tuple(k, l, k2, l2);
  if (const auto it = cache_.find(key); it != cache_.end()) return it->second;

  const std::size_t a = dim(k, l);
  const std::size_t b = dim(k2, l2);
  const std::size_t t = dim(k + k2, l + l2);
  std::vector<ExactMatrix> out(t, ExactMatrix(characteristic(), a, b));
  for (std::size_t i = 0; i < a; ++i) {
    std::vector<Elem> x(a, 0);
    x[i] = 1;
    for (std::size_t j = 0; j < b; ++j) {
      std::vector<Elem> y(b, 0);
      y[j] = 1;
      const auto z = ss_.product(r_, k, l, x, k2, l2, y);
      for (std::size_t m = 0; m < t; ++m) out[m].set(i, j, z[m]);
    }
  }
  cache_.emplace(key, out);
  return out;
}

std::size_t SyntheticPage::dim(int k, int l) const {
  const auto it = dims_.find({k, l});
  return it == dims_.end() ? 0 : it->second;
}

ExactMatrix SyntheticPage::differential(int k, int l) const {
  const auto it = differentials_.find({k, l});
  if (it != differentials_.end()) return it->second;
  return ExactMatrix(char_, dim(k + r_, l - r_ + 1), dim(k, l));
}

std::optional<std::vector<ExactMatrix>> SyntheticPage::product(int k, int l, int k2, int l2) const {
  if (!has_products_) return std::nullopt;
  if (const auto it = products_.find({k, l, k2, l2}); it != products_.end()) return it->second;
  // Absent entries are zero products.
  return std::vector<ExactMatrix>(dim(k + k2, l + l2), ExactMatrix(char_, dim(k, l), dim(k2, l2)));
}

namespace {

std::pair<int, int> parse_cell(const std::string& key) {
  int k = 0, l = 0;
  char tail = 0;
  if (std::sscanf(key.c_str(), " %d , %d %c", &k, &l, &tail) != 2)
    throw InputError("bad page coordinate \"" + key + "\", expected \"k,l\"");
  return {k, l};
}

std::tuple<int, int, int, int> parse_pair(const std::string& key) {
  int k = 0, l = 0, k2 = 0, l2 = 0;
  char tail = 0;
  if (std::sscanf(key.c_str(), " ( %d , %d ) x ( %d , %d ) %c", &k, &l, &k2, &l2, &tail) != 4)
    throw InputError("bad product key \"" + key + "\", expected \"(k,l)x(k',l')\"");
  return {k, l, k2, l2};
}

ExactMatrix parse_matrix(const nlohmann::json& j, std::uint32_t characteristic, std::size_t rows, std::size_t cols,
                         const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": matrix must be an array of rows");
  // An empty list stands for any matrix with no entries.
  if (j.empty() && (rows == 0 || cols == 0)) return ExactMatrix(characteristic, rows, cols);
  if (j.size() != rows) {
    throw InputError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  }
  ExactMatrix m(characteristic, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw InputError(where + ": row " + std::to_string(r) + " should have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, parse_rational(j[r][c]));
  }
  return m;
}

int get_int(const nlohmann::json& j, const char* key, int fallback, bool required) {
  if (!j.contains(key)) {
    if (required) throw InputError(std::string("page is missing \"") + key + "\"");
    return fallback;
  }
  if (!j[key].is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
  return j[key].get<int>();
}

}  // namespace

SyntheticPage SyntheticPage::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("page must be a JSON object");
  SyntheticPage page;
  const int fc = get_int(j, "field_char", 0, true);
  if (fc < 0) throw InputError("field_char must be 0 or a prime");
  page.char_ = static_cast<std::uint32_t>(fc);
  if (page.char_ != 0 && (page.char_ > kMaxPrime || !is_prime(page.char_)))
    throw InputError("field_char must be 0 or a prime <= 251");
  page.n_ = get_int(j, "n", 0, true);
  page.window_ = get_int(j, "window", 0, true);
  if (page.n_ < 0 || page.window_ < 0) throw InputError("n and window must be nonnegative");

  if (j.contains("dims")) {
    for (const auto& [key, v] : j["dims"].items()) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("dims[\"" + key + "\"] must be a count");
      const auto cell = parse_cell(key);
      if (cell.second < 0 || cell.second > page.n_ || cell.first < 0) {
        if (v.get<long long>() != 0) throw InputError("dims[\"" + key + "\"] lies outside rows 0..n");
        continue;
      }
      page.dims_[cell] = v.get<std::size_t>();
    }
  }

  const nlohmann::json* diffs = nullptr;
  if (j.contains("differentials")) {
    const auto& d = j["differentials"];
    if (!d.is_object()) throw InputError("\"differentials\" must map pages to matrices");
    if (j.contains("r")) {
      page.r_ = get_int(j, "r", 2, true);
    } else if (d.size() == 1) {
      page.r_ = std::stoi(d.begin().key());
    }
    const std::string rk = std::to_string(page.r_);
    if (d.contains(rk)) diffs = &d[rk];
  } else {
    page.r_ = get_int(j, "r", 2, false);
  }
  if (page.r_ < 1) throw InputError("page index r must be at least 1");
  if (diffs != nullptr) {
    for (const auto& [key, v] : diffs->items()) {
      const auto [k, l] = parse_cell(key);
      page.differentials_[{k, l}] =
          parse_matrix(v, page.char_, page.dim(k + page.r_, l - page.r_ + 1), page.dim(k, l), "differential " + key);
    }
  }

  if (j.contains("products")) {
    page.has_products_ = true;
    for (const auto& [key, v] : j["products"].items()) {
      const auto [k, l, k2, l2] = parse_pair(key);
      const std::size_t t = page.dim(k + k2, l + l2);
      if (!v.is_array() || v.size() != t) {
        throw InputError("product " + key + ": expected one matrix per target coordinate (" + std::to_string(t) + ")");
      }
      std::vector<ExactMatrix> mats;
      for (std::size_t m = 0; m < t; ++m)
        mats.push_back(parse_matrix(v[m], page.char_, page.dim(k, l), page.dim(k2, l2), "product " + key));
      page.products_[{k, l, k2, l2}] = std::move(mats);
    }
  }
  return page;
}

std::vector<SyntheticPage> synthetic_pages_from_json(const nlohmann::json& j) {
  std::vector<SyntheticPage> out;
  if (j.is_object() && j.contains("pages")) {
    if (!j["pages"].is_array() || j["pages"].empty()) throw InputError("\"pages\" must be a non-empty array");
    for (const auto& p : j["pages"]) out.push_back(SyntheticPage::from_json(p));
    for (std::size_t i = 1; i < out.size(); ++i)
      if (out[i].page() != out[i - 1].page() + 1 || out[i].n() != out[0].n())
        throw InputError("pages must be consecutive and share n");
  } else {
    out.push_back(SyntheticPage::from_json(j));
  }
  return out;
}

}  // namespace eqss
