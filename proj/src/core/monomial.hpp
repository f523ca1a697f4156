#ifndef SCROLL_CORE_MONOMIAL_HPP
#define SCROLL_CORE_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace scroll {

/// Monomial in a fixed number of variables: dense exponent vector with a
/// cached total degree. Position k corresponds to the ring's k-th variable.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one(int nvars);
  static Monomial variable(int nvars, int pos);
  static Monomial from_exponents(std::vector<std::int32_t> exps);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  std::int32_t exponent(int pos) const { return exps_[static_cast<size_t>(pos)]; }
  const std::vector<std::int32_t>& exponents() const { return exps_; }

  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;
  std::vector<int> support() const;  // positions with nonzero exponent

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  std::vector<std::int32_t> exps_;
  std::int32_t degree_ = 0;
};

/// Graded reverse lexicographic order induced by variable positions
/// 0 > 1 > ... > nvars-1: higher total degree wins; on ties the monomial
/// whose trailing exponent difference is negative is the larger one.
std::strong_ordering cmp_degrevlex(const Monomial& a, const Monomial& b);

struct DegrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_degrevlex(a, b) == std::strong_ordering::less;
  }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) {
      h ^= static_cast<size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace scroll

#endif
