#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "focal/form.hpp"
#include "focal/polynomial.hpp"

namespace focal {

/// Projective plane curve F(x, y, z) = 0.
class PlaneCurve {
 public:
  /// Throws DegenerateInput for the zero polynomial and std::invalid_argument
  /// for a non-homogeneous one.
  explicit PlaneCurve(Polynomial f);

  /// Homogenizes an affine polynomial in x, y to its degree.
  static PlaneCurve from_affine(const Polynomial& f);

  const Polynomial& polynomial() const noexcept { return f_; }
  int degree() const noexcept { return f_.degree(); }

 private:
  Polynomial f_;
};

/// K with P F_y - Q F_x = -F K, using the homogenized P and Q. Throws
/// NotIntegralCurve(index) when F does not divide the left side.
Polynomial cofactor(const PrimeField& field, const DiffForm& form, const PlaneCurve& curve,
                    std::size_t index = 0);

bool is_integral_curve(const PrimeField& field, const DiffForm& form, const PlaneCurve& curve);

/// Homogenized Q_x - P_y, of degree d - 1.
Polynomial divergence(const PrimeField& field, const DiffForm& form);

/// One solution alpha of Q_x - P_y = sum alpha_i K_i, free variables zero;
/// nullopt when none exists. Throws NotIntegralCurve for the first curve
/// without a cofactor.
std::optional<std::vector<FieldElement>> darboux_coefficients(const PrimeField& field,
                                                               const DiffForm& form,
                                                               const std::vector<PlaneCurve>& curves);

enum class Condition {
  Smooth,
  NotTangentToInfinity,
  NoMutualTangency,
  DistinctPointsAtInfinity,
  NoTriplePoints,
};

std::string condition_name(Condition c);

struct ConditionFailure {
  Condition condition;
  std::vector<std::size_t> curves;
};

struct ChristopherReport {
  std::vector<ConditionFailure> failures;

  bool holds(Condition c) const;
  bool all() const { return failures.empty(); }
};

/// Checks the general-position conditions over the algebraic closure:
/// each curve smooth and transverse to z = 0, pairs transverse with distinct
/// points on z = 0, and no three curves through one point.
ChristopherReport christopher_check(const PrimeField& field, const std::vector<PlaneCurve>& curves);

}  // namespace focal
