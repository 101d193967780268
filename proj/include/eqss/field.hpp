#pragma once

#include <array>
#include <cstdint>

namespace eqss {

/// Field element, always a canonical representative in [0, p).
using Elem = std::uint8_t;

/// Largest supported characteristic; keeps elements single-byte.
inline constexpr std::uint32_t kMaxPrime = 251;

bool is_prime(std::uint32_t n) noexcept;

/// The prime field F_p, p <= 251. Cheap to copy.
class Field {
 public:
  /// Throws std::invalid_argument unless p is a prime <= 251.
  explicit Field(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    const std::uint32_t s = std::uint32_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(a >= b ? a - b : a + p_ - b);
  }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>(a == 0 ? 0 : p_ - a); }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((std::uint32_t{a} * b) % p_);
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem from_int(long long v) const noexcept;
  /// (-1)^e as a field element.
  Elem sign(long long e) const noexcept { return (e & 1) ? neg(1) : Elem{1}; }

  bool operator==(const Field&) const = default;

 private:
  std::uint32_t p_;
  const std::array<Elem, 256>* inverses_;
};

}  // namespace eqss
