#include "core/field.hpp"

#include "core/errors.hpp"

namespace scroll {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(std::int64_t p) : p_(p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw ValidationError("field modulus must be a prime below 2^31, got " +
                          std::to_string(p));
}

std::int64_t Fp::pow(std::int64_t a, std::int64_t e) const {
  std::int64_t r = 1, b = reduce(a);
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::int64_t Fp::inv(std::int64_t a) const {
  if (a == 0) throw ValidationError("division by zero in GF(p)");
  return pow(a, p_ - 2);
}

}  // namespace scroll
