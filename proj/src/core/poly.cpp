#include "core/poly.hpp"

#include <algorithm>
#include <cctype>

#include "core/errors.hpp"

namespace scroll {

PolyRing::PolyRing(std::int64_t prime, int nvars) : fp_(prime) {
  if (nvars < 0) throw ValidationError("negative variable count");
  ids_.resize(static_cast<size_t>(nvars));
  for (int k = 0; k < nvars; ++k) ids_[static_cast<size_t>(k)] = k + 1;
}

PolyRing::PolyRing(std::int64_t prime, std::vector<int> var_ids) : fp_(prime) {
  for (size_t k = 0; k + 1 < var_ids.size(); ++k)
    if (var_ids[k] >= var_ids[k + 1])
      throw ValidationError("ring variable ids must be strictly increasing");
  if (!var_ids.empty() && var_ids.front() < 1)
    throw ValidationError("ring variable ids must be positive");
  ids_ = std::move(var_ids);
}

int PolyRing::position_of_id(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return -1;
  return static_cast<int>(it - ids_.begin());
}

std::string PolyRing::var_name(int pos) const {
  return "x" + std::to_string(var_id(pos));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].coeff != o.terms_[k].coeff || !(terms_[k].mono == o.terms_[k].mono))
      return false;
  return true;
}

namespace {
void check_ring(const PolyRing& ring, const Polynomial& f) {
  if (!f.is_zero() && f.leading_monomial().nvars() != ring.nvars())
    throw DimensionError("polynomial does not live in the given ring");
}
}  // namespace

Polynomial make_polynomial(const PolyRing& ring, std::vector<Term> terms) {
  const Fp& fp = ring.fp();
  for (auto& t : terms) {
    t.coeff = fp.reduce(t.coeff);
    if (t.mono.nvars() != ring.nvars())
      throw DimensionError("term monomial does not live in the given ring");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return cmp_degrevlex(a.mono, b.mono) == std::strong_ordering::greater;
  });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff = fp.add(merged.back().coeff, t.coeff);
    else
      merged.push_back(std::move(t));
    if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  }
  Polynomial f;
  f.terms_ = std::move(merged);
  return f;
}

Polynomial poly_zero() { return Polynomial{}; }

Polynomial poly_constant(const PolyRing& ring, std::int64_t c) {
  return make_polynomial(ring, {Term{c, Monomial::one(ring.nvars())}});
}

Polynomial poly_variable(const PolyRing& ring, int pos) {
  return make_polynomial(ring, {Term{1, Monomial::variable(ring.nvars(), pos)}});
}

Polynomial poly_of_monomial(const PolyRing& ring, const Monomial& m) {
  return make_polynomial(ring, {Term{1, m}});
}

Polynomial poly_add(const PolyRing& ring, const Polynomial& f, const Polynomial& g) {
  check_ring(ring, f);
  check_ring(ring, g);
  const Fp& fp = ring.fp();
  std::vector<Term> out;
  out.reserve(f.terms().size() + g.terms().size());
  size_t i = 0, j = 0;
  while (i < f.terms().size() && j < g.terms().size()) {
    const Term& a = f.terms()[i];
    const Term& b = g.terms()[j];
    auto c = cmp_degrevlex(a.mono, b.mono);
    if (c == std::strong_ordering::greater) {
      out.push_back(a);
      ++i;
    } else if (c == std::strong_ordering::less) {
      out.push_back(b);
      ++j;
    } else {
      std::int64_t s = fp.add(a.coeff, b.coeff);
      if (s != 0) out.push_back(Term{s, a.mono});
      ++i;
      ++j;
    }
  }
  for (; i < f.terms().size(); ++i) out.push_back(f.terms()[i]);
  for (; j < g.terms().size(); ++j) out.push_back(g.terms()[j]);
  return make_polynomial(ring, std::move(out));
}

Polynomial poly_neg(const PolyRing& ring, const Polynomial& f) {
  check_ring(ring, f);
  std::vector<Term> out(f.terms());
  for (auto& t : out) t.coeff = ring.fp().neg(t.coeff);
  return make_polynomial(ring, std::move(out));
}

Polynomial poly_sub(const PolyRing& ring, const Polynomial& f, const Polynomial& g) {
  return poly_add(ring, f, poly_neg(ring, g));
}

Polynomial poly_scale(const PolyRing& ring, std::int64_t c, const Polynomial& f) {
  check_ring(ring, f);
  std::int64_t cr = ring.fp().reduce(c);
  if (cr == 0) return poly_zero();
  std::vector<Term> out(f.terms());
  for (auto& t : out) t.coeff = ring.fp().mul(t.coeff, cr);
  return make_polynomial(ring, std::move(out));
}

Polynomial poly_mul_term(const PolyRing& ring, const Term& t, const Polynomial& f) {
  check_ring(ring, f);
  std::int64_t cr = ring.fp().reduce(t.coeff);
  if (cr == 0) return poly_zero();
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& ft : f.terms())
    out.push_back(Term{ring.fp().mul(cr, ft.coeff), mono_mul(t.mono, ft.mono)});
  return make_polynomial(ring, std::move(out));
}

Polynomial poly_mul(const PolyRing& ring, const Polynomial& f, const Polynomial& g) {
  check_ring(ring, f);
  check_ring(ring, g);
  std::vector<Term> out;
  out.reserve(f.terms().size() * g.terms().size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms())
      out.push_back(Term{ring.fp().mul(a.coeff, b.coeff), mono_mul(a.mono, b.mono)});
  return make_polynomial(ring, std::move(out));
}

Polynomial poly_monic(const PolyRing& ring, const Polynomial& f) {
  check_ring(ring, f);
  if (f.is_zero()) return f;
  return poly_scale(ring, ring.fp().inv(f.leading_term().coeff), f);
}

std::string to_string(const PolyRing& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int k = 0; k < m.nvars(); ++k) {
    if (m.exponent(k) == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(k);
    if (m.exponent(k) > 1) s += "^" + std::to_string(m.exponent(k));
  }
  return s;
}

std::string to_string(const PolyRing& ring, const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Fp& fp = ring.fp();
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = fp.lift_balanced(t.coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (first) {
      if (negative) s += "-";
      first = false;
    } else {
      s += negative ? " - " : " + ";
    }
    if (t.mono.is_one())
      s += std::to_string(mag);
    else if (mag == 1)
      s += to_string(ring, t.mono);
    else
      s += std::to_string(mag) + "*" + to_string(ring, t.mono);
  }
  return s;
}

namespace {

struct Cursor {
  std::string_view s;
  size_t k = 0;
  void skip_ws() {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
  }
  bool done() {
    skip_ws();
    return k >= s.size();
  }
  char peek() { return s[k]; }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("cannot parse polynomial: " + what + " at offset " +
                     std::to_string(k) + " in \"" + std::string(s) + "\"");
  }
  std::int64_t number() {
    skip_ws();
    size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == start) fail("expected a number");
    std::int64_t v = 0;
    for (size_t i = start; i < k; ++i) {
      v = v * 10 + (s[i] - '0');
      if (v > (std::int64_t{1} << 62) / 2) fail("numeric literal too large");
    }
    return v;
  }
};

// term := number ['*' factors] | factors ; factor := x<id> ['^' exp]
Term parse_term(const PolyRing& ring, Cursor& c) {
  Term t{1, Monomial::one(ring.nvars())};
  bool saw_any = false;
  c.skip_ws();
  if (c.k < c.s.size() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    t.coeff = ring.fp().reduce(c.number());
    saw_any = true;
    c.skip_ws();
    if (c.k < c.s.size() && c.peek() == '*')
      ++c.k;
    else
      return t;  // bare constant
  }
  while (true) {
    c.skip_ws();
    if (c.k >= c.s.size() || c.peek() != 'x') {
      if (!saw_any) c.fail("expected a term");
      break;
    }
    ++c.k;
    std::int64_t id = c.number();
    int pos = ring.position_of_id(static_cast<int>(id));
    if (pos < 0) c.fail("variable x" + std::to_string(id) + " is not in this ring");
    std::int64_t e = 1;
    c.skip_ws();
    if (c.k < c.s.size() && c.peek() == '^') {
      ++c.k;
      e = c.number();
    }
    std::vector<std::int32_t> exps(t.mono.exponents());
    exps[static_cast<size_t>(pos)] += static_cast<std::int32_t>(e);
    t.mono = Monomial::from_exponents(std::move(exps));
    saw_any = true;
    c.skip_ws();
    if (c.k < c.s.size() && c.peek() == '*')
      ++c.k;
    else
      break;
  }
  return t;
}

}  // namespace

Polynomial parse_polynomial(const PolyRing& ring, std::string_view text) {
  Cursor c{text};
  std::vector<Term> terms;
  c.skip_ws();
  if (c.done()) throw ParseError("empty polynomial text");
  bool negative = false;
  if (c.peek() == '+' || c.peek() == '-') {
    negative = c.peek() == '-';
    ++c.k;
  }
  while (true) {
    Term t = parse_term(ring, c);
    if (negative) t.coeff = ring.fp().neg(ring.fp().reduce(t.coeff));
    terms.push_back(std::move(t));
    if (c.done()) break;
    char op = c.peek();
    if (op != '+' && op != '-') c.fail("expected '+' or '-'");
    negative = op == '-';
    ++c.k;
  }
  return make_polynomial(ring, std::move(terms));
}

Monomial parse_monomial(const PolyRing& ring, std::string_view text) {
  Polynomial f = parse_polynomial(ring, text);
  if (f.nterms() != 1 || f.leading_term().coeff != 1)
    throw ParseError("not a monomial: \"" + std::string(text) + "\"");
  return f.leading_monomial();
}

}  // namespace scroll
