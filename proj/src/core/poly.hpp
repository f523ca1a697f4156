#ifndef SCROLL_CORE_POLY_HPP
#define SCROLL_CORE_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/field.hpp"
#include "core/monomial.hpp"

namespace scroll {

/// Ambient polynomial ring: a prime field, a number of variables, and the
/// global subscript of each variable. Reduced rings keep the subscripts of
/// the surviving variables, so x9 prints as x9 whatever its position.
class PolyRing {
 public:
  PolyRing(std::int64_t prime, int nvars);
  PolyRing(std::int64_t prime, std::vector<int> var_ids);

  int nvars() const { return static_cast<int>(ids_.size()); }
  std::int64_t prime() const { return fp_.p(); }
  const Fp& fp() const { return fp_; }

  int var_id(int pos) const { return ids_[static_cast<size_t>(pos)]; }
  const std::vector<int>& var_ids() const { return ids_; }
  int position_of_id(int id) const;  // -1 if the id is not in this ring
  std::string var_name(int pos) const;

  bool same_ring(const PolyRing& o) const {
    return fp_.p() == o.fp_.p() && ids_ == o.ids_;
  }

 private:
  Fp fp_;
  std::vector<int> ids_;
};

struct Term {
  std::int64_t coeff = 0;  // residue in [0, p), nonzero in a normalized poly
  Monomial mono;
};

/// Sparse polynomial: terms strictly decreasing in degrevlex, no zero
/// coefficients. The zero polynomial is the empty term list.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

  bool operator==(const Polynomial& o) const;

 private:
  friend Polynomial make_polynomial(const PolyRing&, std::vector<Term>);
  std::vector<Term> terms_;
};

/// Normalizes an arbitrary term list: reduces coefficients, sorts
/// descending, merges equal monomials, drops zeros.
Polynomial make_polynomial(const PolyRing& ring, std::vector<Term> terms);

Polynomial poly_zero();
Polynomial poly_constant(const PolyRing& ring, std::int64_t c);
Polynomial poly_variable(const PolyRing& ring, int pos);
Polynomial poly_of_monomial(const PolyRing& ring, const Monomial& m);

Polynomial poly_add(const PolyRing& ring, const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const PolyRing& ring, const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const PolyRing& ring, const Polynomial& f);
Polynomial poly_scale(const PolyRing& ring, std::int64_t c, const Polynomial& f);
Polynomial poly_mul(const PolyRing& ring, const Polynomial& f, const Polynomial& g);
Polynomial poly_mul_term(const PolyRing& ring, const Term& t, const Polynomial& f);
Polynomial poly_monic(const PolyRing& ring, const Polynomial& f);

/// Canonical text form: terms in descending order, coefficients lifted to
/// (-p/2, p/2], e.g. "x2^2 - x1*x3". The empty sum renders as "0".
std::string to_string(const PolyRing& ring, const Polynomial& f);
std::string to_string(const PolyRing& ring, const Monomial& m);
Polynomial parse_polynomial(const PolyRing& ring, std::string_view text);
Monomial parse_monomial(const PolyRing& ring, std::string_view text);

}  // namespace scroll

#endif
