#include "focal/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace focal {

Polynomial Polynomial::constant(const PrimeField& field, FieldElement c) {
  return term(field, c, Monomial{});
}

Polynomial Polynomial::variable(const PrimeField& field, Var v) {
  Monomial m;
  m.exp[static_cast<int>(v)] = 1;
  return term(field, field.one(), m);
}

Polynomial Polynomial::term(const PrimeField& field, FieldElement c, Monomial m) {
  Polynomial p(field);
  p.set_coeff(m, c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::degree_in(Var v) const noexcept {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

FieldElement Polynomial::coeff(Monomial m) const noexcept {
  const auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::set_coeff(Monomial m, FieldElement c) {
  if (c.is_zero()) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

void Polynomial::add_to_coeff(Monomial m, FieldElement c) {
  set_coeff(m, field_.add(coeff(m), c));
}

const Polynomial::Terms::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

void Polynomial::check_same_field(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("polynomials over different fields");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_field(o);
  for (const auto& [m, c] : o.terms_) add_to_coeff(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_field(o);
  for (const auto& [m, c] : o.terms_) add_to_coeff(m, field_.neg(c));
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
  return r;
}

Polynomial Polynomial::scaled(FieldElement s) const {
  Polynomial r(field_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.mul(c, s));
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_field(b);
  Polynomial r(a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < 3; ++i) m.exp[i] = ma.exp[i] + mb.exp[i];
      r.add_to_coeff(m, a.field_.mul(ca, cb));
    }
  }
  return r;
}

Polynomial Polynomial::derivative(Var v) const {
  const int i = static_cast<int>(v);
  Polynomial r(field_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[i] == 0) continue;
    Monomial d = m;
    --d.exp[i];
    r.add_to_coeff(d, field_.mul(c, field_.from_int(m.exp[i])));
  }
  return r;
}

Polynomial Polynomial::power(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial r = constant(field_, field_.one());
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return r;
}

FieldElement Polynomial::evaluate(FieldElement x, FieldElement y, FieldElement z) const {
  FieldElement sum = field_.zero();
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    t = field_.mul(t, field_.pow(x, static_cast<std::uint64_t>(m.exp[0])));
    t = field_.mul(t, field_.pow(y, static_cast<std::uint64_t>(m.exp[1])));
    t = field_.mul(t, field_.pow(z, static_cast<std::uint64_t>(m.exp[2])));
    sum = field_.add(sum, t);
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::array<Polynomial, 3>& images) const {
  for (const auto& img : images) check_same_field(img);
  // Cache powers of each image; degrees here are tiny.
  std::array<std::vector<Polynomial>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back(constant(field_, field_.one()));
    const int top = degree_in(static_cast<Var>(v));
    for (int e = 1; e <= top; ++e) powers[v].push_back(powers[v].back() * images[v]);
  }
  Polynomial r(field_);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(field_, c);
    for (int v = 0; v < 3; ++v) {
      if (m.exp[v] > 0) t = t * powers[v][m.exp[v]];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::specialize(Var v, FieldElement value) const {
  const int i = static_cast<int>(v);
  Polynomial r(field_);
  for (const auto& [m, c] : terms_) {
    Monomial k = m;
    k.exp[i] = 0;
    r.add_to_coeff(k, field_.mul(c, field_.pow(value, static_cast<std::uint64_t>(m.exp[i]))));
  }
  return r;
}

Polynomial Polynomial::homogenize(int d) const {
  if (uses(Var::Z)) throw std::invalid_argument("homogenize expects a polynomial in x, y");
  if (degree() > d) throw std::invalid_argument("degree exceeds homogenization degree");
  Polynomial r(field_);
  for (const auto& [m, c] : terms_) {
    Monomial k = m;
    k.exp[2] = d - m.degree();
    r.terms_.emplace(k, c);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(field_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) r.terms_.emplace(m, c);
  }
  return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const PrimeField& field = dividend.field();
  const auto& [lead_m, lead_c] = divisor.leading_term();
  const FieldElement lead_inv = field.inv(lead_c);
  Polynomial rest = dividend;
  Polynomial quotient(field);
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_term();
    Monomial q;
    for (int i = 0; i < 3; ++i) {
      q.exp[i] = m.exp[i] - lead_m.exp[i];
      // The leading term of a single-divisor Groebner basis must divide the
      // leading term of any multiple; otherwise the remainder is nonzero.
      if (q.exp[i] < 0) return std::nullopt;
    }
    const Polynomial t = Polynomial::term(field, field.mul(c, lead_inv), q);
    quotient += t;
    rest -= t * divisor;
  }
  return quotient;
}

}  // namespace focal
