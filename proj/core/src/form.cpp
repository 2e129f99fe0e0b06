#include "focal/form.hpp"

#include <stdexcept>

#include "focal/errors.hpp"

namespace focal {
namespace {

FieldElement coeff_or_zero(const DiffForm& f, Component c, int i, int j) {
  if (i + j > f.degree()) return FieldElement{};
  return c == Component::P ? f.p(i, j) : f.q(i, j);
}

}  // namespace

std::string Direction::name() const {
  return (component == Component::P ? "p" : "q") + std::to_string(i) + std::to_string(j);
}

std::vector<Direction> poincare_directions(int degree, bool homogeneous_only) {
  std::vector<Direction> dirs;
  for (Component c : {Component::P, Component::Q}) {
    for (int n = homogeneous_only ? degree : 2; n <= degree; ++n) {
      for (int j = 0; j <= n; ++j) dirs.push_back({c, n - j, j});
    }
  }
  return dirs;
}

bool is_poincare(const PrimeField& field, const DiffForm& form) {
  return has_poincare_linear_part(field, form);
}

DiffForm linear_form(const PrimeField& field, int degree) {
  if (degree < 1) throw std::invalid_argument("form degree must be at least 1");
  DiffForm f(degree, field.zero());
  f.p(1, 0) = field.one();
  f.q(0, 1) = field.one();
  return f;
}

DiffForm random_poincare(const PrimeField& field, int degree, SampleStream& rng,
                         RandomFormOptions options) {
  if (options.solve_s1 && (degree != 3 || options.homogeneous_only)) {
    throw std::invalid_argument("solve_s1 requires a general degree-3 form");
  }
  DiffForm f = linear_form(field, degree);
  const Direction q30{Component::Q, 3, 0};
  for (const Direction& d : poincare_directions(degree, options.homogeneous_only)) {
    if (options.solve_s1 && d == q30) continue;
    coefficient(f, d) = rng.residue(field);
  }
  if (options.solve_s1) {
    // s1 has q30 with coefficient 1, so the remaining terms fix it.
    f.q(3, 0) = field.neg(first_focal_value(field, f));
  }
  return f;
}

FieldElement first_focal_value(const PrimeField& field, const DiffForm& form) {
  if (form.degree() > 3) throw std::invalid_argument("closed formula covers degree <= 3");
  auto p = [&](int i, int j) { return coeff_or_zero(form, Component::P, i, j); };
  auto q = [&](int i, int j) { return coeff_or_zero(form, Component::Q, i, j); };
  const FieldElement third = field.inverse_of_integer(3);
  const FieldElement two_thirds = field.add(third, third);
  auto m = [&](FieldElement a, FieldElement b) { return field.mul(a, b); };

  FieldElement s = field.zero();
  s = field.add(s, m(two_thirds, m(p(0, 2), q(0, 2))));
  s = field.add(s, m(third, m(p(0, 2), p(1, 1))));
  s = field.sub(s, m(third, m(q(0, 2), q(1, 1))));
  s = field.add(s, m(third, m(p(1, 1), p(2, 0))));
  s = field.sub(s, m(third, m(q(1, 1), q(2, 0))));
  s = field.sub(s, m(two_thirds, m(p(2, 0), q(2, 0))));
  s = field.sub(s, p(0, 3));
  s = field.add(s, m(third, q(1, 2)));
  s = field.sub(s, m(third, p(2, 1)));
  s = field.add(s, q(3, 0));
  return s;
}

DiffForm make_hamiltonian(const PrimeField& field, const Polynomial& potential) {
  if (potential.uses(Var::Z)) throw MalformedPotential("potential must be a polynomial in x, y");
  const int degree = potential.degree() - 1;
  if (degree < 1) throw MalformedPotential("potential must have degree at least 2");
  const FieldElement half = field.inverse_of_integer(2);
  for (const auto& [m, c] : potential.terms()) {
    if (m.degree() > 2) continue;
    const bool square = m == monomial(2, 0) || m == monomial(0, 2);
    if (!square || c != half) {
      throw MalformedPotential("terms of degree <= 2 must be (x^2 + y^2)/2");
    }
  }
  if (potential.coeff(monomial(2, 0)) != half || potential.coeff(monomial(0, 2)) != half) {
    throw MalformedPotential("quadratic part must be (x^2 + y^2)/2");
  }
  return from_polynomials(potential.derivative(Var::X), potential.derivative(Var::Y), degree);
}

DiffForm make_mirror_symmetric(const PrimeField& field, int degree, SampleStream& rng) {
  DiffForm f = linear_form(field, degree);
  for (const Direction& d : poincare_directions(degree)) {
    const bool odd = d.j % 2 == 1;
    if ((d.component == Component::P) != odd) coefficient(f, d) = rng.residue(field);
  }
  return f;
}

bool is_mirror_symmetric(const PrimeField&, const DiffForm& form) {
  for (int n = 0; n <= form.degree(); ++n) {
    for (int j = 0; j <= n; ++j) {
      const bool odd = j % 2 == 1;
      if (odd && !form.p(n - j, j).is_zero()) return false;
      if (!odd && !form.q(n - j, j).is_zero()) return false;
    }
  }
  return true;
}

DiffForm rotate(const PrimeField& field, const DiffForm& form, FieldElement c, FieldElement s) {
  if (field.add(field.mul(c, c), field.mul(s, s)) != field.one()) throw NotARotation();
  const auto x = Polynomial::variable(field, Var::X);
  const auto y = Polynomial::variable(field, Var::Y);
  const auto z = Polynomial::variable(field, Var::Z);
  const std::array<Polynomial, 3> phi = {x.scaled(c) - y.scaled(s), x.scaled(s) + y.scaled(c), z};
  const auto [p, q] = to_polynomials(field, form);
  const Polynomial pp = p.substitute(phi);
  const Polynomial qq = q.substitute(phi);
  return from_polynomials(pp.scaled(c) + qq.scaled(s), qq.scaled(c) - pp.scaled(s),
                          form.degree());
}

std::optional<std::pair<FieldElement, FieldElement>> rotation_from_parameter(
    const PrimeField& field, FieldElement t) {
  const FieldElement t2 = field.mul(t, t);
  const FieldElement den = field.add(field.one(), t2);
  if (den.is_zero()) return std::nullopt;
  const FieldElement inv = field.inv(den);
  return std::pair{field.mul(field.sub(field.one(), t2), inv),
                   field.mul(field.add(t, t), inv)};
}

bool is_exact(const PrimeField& field, const DiffForm& form) {
  const auto [p, q] = to_polynomials(field, form);
  return q.derivative(Var::X) == p.derivative(Var::Y);
}

std::pair<Polynomial, Polynomial> to_polynomials(const PrimeField& field, const DiffForm& form,
                                                 bool homogeneous) {
  Polynomial p(field);
  Polynomial q(field);
  const int d = form.degree();
  for (int n = 0; n <= d; ++n) {
    for (int j = 0; j <= n; ++j) {
      const Monomial m = monomial(n - j, j, homogeneous ? d - n : 0);
      p.set_coeff(m, form.p(n - j, j));
      q.set_coeff(m, form.q(n - j, j));
    }
  }
  return {std::move(p), std::move(q)};
}

DiffForm from_polynomials(const Polynomial& p, const Polynomial& q, int degree) {
  const PrimeField& field = p.field();
  if (!(field == q.field())) throw std::invalid_argument("P and Q over different fields");
  DiffForm f(degree, field.zero());
  auto fill = [&](const Polynomial& poly, Component c) {
    for (const auto& [m, v] : poly.terms()) {
      if (m[Var::Z] != 0) throw std::invalid_argument("expected an affine polynomial");
      if (m.degree() > degree) throw std::invalid_argument("polynomial exceeds form degree");
      (c == Component::P ? f.p(m[Var::X], m[Var::Y]) : f.q(m[Var::X], m[Var::Y])) = v;
    }
  };
  fill(p, Component::P);
  fill(q, Component::Q);
  return f;
}

}  // namespace focal
