#include "focal/darboux.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "focal/elimination.hpp"
#include "focal/errors.hpp"
#include "focal/matrix.hpp"

namespace focal {

PlaneCurve::PlaneCurve(Polynomial f) : f_(std::move(f)) {
  if (f_.is_zero()) throw DegenerateInput("curve polynomial is zero");
  if (!f_.is_homogeneous()) throw std::invalid_argument("curve polynomial must be homogeneous");
}

PlaneCurve PlaneCurve::from_affine(const Polynomial& f) {
  if (f.is_zero()) throw DegenerateInput("curve polynomial is zero");
  return PlaneCurve(f.homogenize(f.degree()));
}

namespace {

Polynomial cofactor_numerator(const PrimeField& field, const DiffForm& form, const PlaneCurve& curve) {
  const auto [p, q] = to_polynomials(field, form, true);
  const Polynomial& f = curve.polynomial();
  return p * f.derivative(Var::Y) - q * f.derivative(Var::X);
}

}  // namespace

Polynomial cofactor(const PrimeField& field, const DiffForm& form, const PlaneCurve& curve,
                    std::size_t index) {
  auto k = divide_exact(-cofactor_numerator(field, form, curve), curve.polynomial());
  if (!k) throw NotIntegralCurve(index);
  return *k;
}

bool is_integral_curve(const PrimeField& field, const DiffForm& form, const PlaneCurve& curve) {
  return divide_exact(cofactor_numerator(field, form, curve), curve.polynomial()).has_value();
}

Polynomial divergence(const PrimeField& field, const DiffForm& form) {
  const auto [p, q] = to_polynomials(field, form, true);
  return q.derivative(Var::X) - p.derivative(Var::Y);
}

std::optional<std::vector<FieldElement>> darboux_coefficients(const PrimeField& field,
                                                               const DiffForm& form,
                                                               const std::vector<PlaneCurve>& curves) {
  std::vector<Polynomial> cofactors;
  for (std::size_t i = 0; i < curves.size(); ++i) cofactors.push_back(cofactor(field, form, curves[i], i));
  const Polynomial target = divergence(field, form);

  std::vector<Monomial> rows;
  const int d = form.degree() - 1;
  for (int a = d; a >= 0; --a) {
    for (int b = d - a; b >= 0; --b) rows.push_back(monomial(a, b, d - a - b));
  }
  MatrixFp m(rows.size(), curves.size());
  std::vector<FieldElement> rhs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cofactors.size(); ++c) m(r, c) = cofactors[c].coeff(rows[r]);
    rhs.push_back(target.coeff(rows[r]));
  }
  return solve_mod_p(field, std::move(m), rhs);
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::Smooth: return "smooth";
    case Condition::NotTangentToInfinity: return "not-tangent-to-infinity";
    case Condition::NoMutualTangency: return "no-mutual-tangency";
    case Condition::DistinctPointsAtInfinity: return "distinct-points-at-infinity";
    case Condition::NoTriplePoints: return "no-triple-points";
  }
  return "unknown";
}

bool ChristopherReport::holds(Condition c) const {
  return std::none_of(failures.begin(), failures.end(),
                      [c](const ConditionFailure& f) { return f.condition == c; });
}

ChristopherReport christopher_check(const PrimeField& field, const std::vector<PlaneCurve>& curves) {
  ChristopherReport report;
  const std::size_t n = curves.size();
  std::vector<std::array<Polynomial, 3>> grads;
  std::vector<Polynomial> at_infinity;
  for (const auto& c : curves) {
    const Polynomial& f = c.polynomial();
    grads.push_back({f.derivative(Var::X), f.derivative(Var::Y), f.derivative(Var::Z)});
    at_infinity.push_back(f.specialize(Var::Z, field.zero()));
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& f = curves[i].polynomial();
    if (has_projective_common_zero(field, {f, grads[i][0], grads[i][1], grads[i][2]})) {
      report.failures.push_back({Condition::Smooth, {i}});
    }
    // A repeated factor of the binary form is a common zero with its partials.
    const Polynomial& b = at_infinity[i];
    if (b.is_zero() ||
        has_line_common_zero(field, {b, b.derivative(Var::X), b.derivative(Var::Y)})) {
      report.failures.push_back({Condition::NotTangentToInfinity, {i}});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Tangent at a common point: the gradients are proportional.
      const auto& gi = grads[i];
      const auto& gj = grads[j];
      const std::vector<Polynomial> system = {
          curves[i].polynomial(), curves[j].polynomial(),
          gi[0] * gj[1] - gi[1] * gj[0],
          gi[0] * gj[2] - gi[2] * gj[0],
          gi[1] * gj[2] - gi[2] * gj[1],
      };
      if (has_projective_common_zero(field, system)) {
        report.failures.push_back({Condition::NoMutualTangency, {i, j}});
      }
      if (has_line_common_zero(field, {at_infinity[i], at_infinity[j]})) {
        report.failures.push_back({Condition::DistinctPointsAtInfinity, {i, j}});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (has_projective_common_zero(
                field, {curves[i].polynomial(), curves[j].polynomial(), curves[k].polynomial()})) {
          report.failures.push_back({Condition::NoTriplePoints, {i, j, k}});
        }
      }
    }
  }
  return report;
}

}  // namespace focal
