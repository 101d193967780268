#include "eqss/field.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace eqss {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using InverseTable = std::array<Elem, 256>;

const std::vector<InverseTable>& inverse_tables() {
  static const std::vector<InverseTable> tables = [] {
    std::vector<InverseTable> t(kMaxPrime + 1);
    for (std::uint32_t p = 2; p <= kMaxPrime; ++p) {
      if (!is_prime(p)) continue;
      t[p].fill(0);
      for (std::uint32_t a = 1; a < p; ++a) {
        for (std::uint32_t b = 1; b < p; ++b) {
          if ((a * b) % p == 1) {
            t[p][a] = static_cast<Elem>(b);
            break;
          }
        }
      }
    }
    return t;
  }();
  return tables;
}

}  // namespace

Field::Field(std::uint32_t p) : p_(p), inverses_(nullptr) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime <= 251, got " +
                                std::to_string(p));
  }
  inverses_ = &inverse_tables()[p];
}

Elem Field::inv(Elem a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return (*inverses_)[a % p_];
}

Elem Field::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

}  // namespace eqss
