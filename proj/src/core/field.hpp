#ifndef SCROLL_CORE_FIELD_HPP
#define SCROLL_CORE_FIELD_HPP

#include <cstdint>

namespace scroll {

bool is_prime(std::int64_t n);

/// Arithmetic in the prime field GF(p). Elements are canonical residues
/// in [0, p). The modulus is fixed at construction; p < 2^31 so products
/// of residues fit in int64 before reduction.
class Fp {
 public:
  explicit Fp(std::int64_t p);

  std::int64_t p() const { return p_; }

  std::int64_t reduce(std::int64_t a) const {
    std::int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    std::int64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    std::int64_t s = a - b;
    return s < 0 ? s + p_ : s;
  }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }
  std::int64_t pow(std::int64_t a, std::int64_t e) const;
  std::int64_t inv(std::int64_t a) const;  // a != 0

  /// Representative in (-p/2, p/2], for readable printing.
  std::int64_t lift_balanced(std::int64_t a) const {
    return a > p_ / 2 ? a - p_ : a;
  }

 private:
  std::int64_t p_;
};

}  // namespace scroll

#endif
