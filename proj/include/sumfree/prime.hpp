#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumfree {

/// Prime modulus for Z/pZ, validated at construction.
///
/// Accepts odd primes in [3, 2^31 - 1]; the upper bound keeps every product
/// of two canonical residues inside int64 range.
class Prime {
 public:
  explicit Prime(std::int64_t p) : p_(p) {
    if (p < 3 || p > kMaxValue || !is_prime(p)) {
      throw std::invalid_argument("Prime: " + std::to_string(p) +
                                  " is not an odd prime in [3, 2^31-1]");
    }
  }

  std::int64_t value() const noexcept { return p_; }

  friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(Prime a, Prime b) noexcept { return a.p_ != b.p_; }

  static bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }

  static constexpr std::int64_t kMaxValue = (std::int64_t{1} << 31) - 1;

 private:
  std::int64_t p_;
};

/// Canonical representative of x in [0, p).
inline std::int64_t mod_reduce(std::int64_t x, Prime p) noexcept {
  std::int64_t r = x % p.value();
  return r < 0 ? r + p.value() : r;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, Prime p) noexcept {
  return (mod_reduce(a, p) * mod_reduce(b, p)) % p.value();
}

/// Inverse of a mod p via extended Euclid. Throws if p divides a.
inline std::int64_t mod_inverse(std::int64_t a, Prime p) {
  std::int64_t r = mod_reduce(a, p);
  if (r == 0) {
    throw std::invalid_argument("mod_inverse: argument divisible by modulus");
  }
  std::int64_t t0 = 0, t1 = 1, r0 = p.value(), r1 = r;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
  }
  return mod_reduce(t0, p);
}

}  // namespace sumfree
