#include "core/monomial.hpp"

#include <numeric>

#include "core/errors.hpp"

namespace scroll {

namespace {
void check_same_nvars(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("monomials live in different ambient rings (" +
                         std::to_string(a.nvars()) + " vs " +
                         std::to_string(b.nvars()) + " variables)");
}
}  // namespace

Monomial Monomial::one(int nvars) {
  Monomial m;
  m.exps_.assign(static_cast<size_t>(nvars), 0);
  return m;
}

Monomial Monomial::variable(int nvars, int pos) {
  Monomial m = one(nvars);
  m.exps_[static_cast<size_t>(pos)] = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::from_exponents(std::vector<std::int32_t> exps) {
  Monomial m;
  for (auto e : exps)
    if (e < 0) throw ValidationError("negative exponent in monomial");
  m.degree_ = std::accumulate(exps.begin(), exps.end(), std::int32_t{0});
  m.exps_ = std::move(exps);
  return m;
}

bool Monomial::is_squarefree() const {
  for (auto e : exps_)
    if (e > 1) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int k = 0; k < nvars(); ++k)
    if (exps_[static_cast<size_t>(k)] > 0) s.push_back(k);
  return s;
}

std::strong_ordering cmp_degrevlex(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  if (a.degree() != b.degree())
    return a.degree() < b.degree() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  for (int k = a.nvars() - 1; k >= 0; --k) {
    std::int32_t d = a.exponent(k) - b.exponent(k);
    if (d != 0)
      return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  std::vector<std::int32_t> e(a.exponents());
  for (int k = 0; k < b.nvars(); ++k) e[static_cast<size_t>(k)] += b.exponent(k);
  return Monomial::from_exponents(std::move(e));
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  for (int k = 0; k < a.nvars(); ++k)
    if (a.exponent(k) > b.exponent(k)) return false;
  return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  std::vector<std::int32_t> e(a.exponents());
  for (int k = 0; k < b.nvars(); ++k) {
    e[static_cast<size_t>(k)] -= b.exponent(k);
    if (e[static_cast<size_t>(k)] < 0)
      throw ValidationError("monomial quotient is not a monomial");
  }
  return Monomial::from_exponents(std::move(e));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  std::vector<std::int32_t> e(a.exponents());
  for (int k = 0; k < b.nvars(); ++k)
    e[static_cast<size_t>(k)] = std::max(e[static_cast<size_t>(k)], b.exponent(k));
  return Monomial::from_exponents(std::move(e));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  for (int k = 0; k < a.nvars(); ++k)
    if (a.exponent(k) > 0 && b.exponent(k) > 0) return false;
  return true;
}

}  // namespace scroll
