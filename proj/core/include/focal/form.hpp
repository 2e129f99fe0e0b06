#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "focal/polynomial.hpp"
#include "focal/prime_field.hpp"
#include "focal/sampling.hpp"

namespace focal {

/// P dx + Q dy of degree d, stored as two dense triangles of coefficients.
/// p(i, j) is the coefficient of x^i y^j (z^{d-i-j} in homogeneous terms).
template <class T>
class BasicDiffForm {
 public:
  using value_type = T;

  BasicDiffForm() = default;
  BasicDiffForm(int degree, const T& zero)
      : degree_(degree), p_(size_for(degree), zero), q_(size_for(degree), zero) {}

  static constexpr std::size_t index(int i, int j) noexcept {
    const auto n = static_cast<std::size_t>(i + j);
    return n * (n + 1) / 2 + static_cast<std::size_t>(j);
  }
  static constexpr std::size_t size_for(int degree) noexcept { return index(0, degree) + 1; }

  int degree() const noexcept { return degree_; }

  const T& p(int i, int j) const { return p_[index(i, j)]; }
  const T& q(int i, int j) const { return q_[index(i, j)]; }
  T& p(int i, int j) { return p_[index(i, j)]; }
  T& q(int i, int j) { return q_[index(i, j)]; }

  const std::vector<T>& p_coefficients() const noexcept { return p_; }
  const std::vector<T>& q_coefficients() const noexcept { return q_; }

  /// Applies f to every coefficient, e.g. to lift a form into another ring.
  template <class F>
  auto transform(F&& f) const -> BasicDiffForm<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    BasicDiffForm<U> out;
    out.degree_ = degree_;
    out.p_.reserve(p_.size());
    out.q_.reserve(q_.size());
    for (const T& v : p_) out.p_.push_back(f(v));
    for (const T& v : q_) out.q_.push_back(f(v));
    return out;
  }

  friend bool operator==(const BasicDiffForm&, const BasicDiffForm&) = default;

 private:
  template <class>
  friend class BasicDiffForm;

  int degree_ = 0;
  std::vector<T> p_;
  std::vector<T> q_;
};

using DiffForm = BasicDiffForm<FieldElement>;

enum class Component { P, Q };

/// A coordinate direction of the space of Poincare forms: one free
/// coefficient p_ij or q_ij with 2 <= i+j <= d.
struct Direction {
  Component component;
  int i;
  int j;

  std::string name() const;
  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Free coefficients in the order p20, p11, p02, p30, ..., p03, q20, ..., q03.
/// With homogeneous_only only the degree-d coefficients are listed.
std::vector<Direction> poincare_directions(int degree, bool homogeneous_only = false);

/// Coefficient selected by a direction.
template <class T>
T& coefficient(BasicDiffForm<T>& form, const Direction& d) {
  return d.component == Component::P ? form.p(d.i, d.j) : form.q(d.i, d.j);
}
template <class T>
const T& coefficient(const BasicDiffForm<T>& form, const Direction& d) {
  return d.component == Component::P ? form.p(d.i, d.j) : form.q(d.i, d.j);
}

/// Linear part x dx + y dy, p10 = q01 = 1.
template <class Ring>
bool has_poincare_linear_part(const Ring& ring, const BasicDiffForm<typename Ring::value_type>& f) {
  if (f.degree() < 1) return false;
  return ring.equal(f.p(1, 0), ring.one()) && ring.equal(f.q(0, 1), ring.one()) &&
         ring.is_zero(f.p(0, 0)) && ring.is_zero(f.p(0, 1)) && ring.is_zero(f.q(0, 0)) &&
         ring.is_zero(f.q(1, 0));
}

bool is_poincare(const PrimeField& field, const DiffForm& form);

/// x dx + y dy as a form of the given degree.
DiffForm linear_form(const PrimeField& field, int degree);

struct RandomFormOptions {
  bool homogeneous_only = false;
  /// Choose q30 so that the first focal value vanishes. Degree 3 only.
  bool solve_s1 = false;
};

/// Uniform random Poincare form. Draws coefficients in direction order; with
/// solve_s1 the q30 draw is skipped.
DiffForm random_poincare(const PrimeField& field, int degree, SampleStream& rng,
                         RandomFormOptions options = {});

/// Closed formula for the first focal value of a form of degree <= 3.
FieldElement first_focal_value(const PrimeField& field, const DiffForm& form);

/// P = H_x, Q = H_y. H must be a polynomial in x, y of degree >= 2 whose
/// terms of degree <= 2 are exactly (x^2 + y^2)/2.
DiffForm make_hamiltonian(const PrimeField& field, const Polynomial& potential);

/// Random form with P(x,-y) = P(x,y) and Q(x,-y) = -Q(x,y).
DiffForm make_mirror_symmetric(const PrimeField& field, int degree, SampleStream& rng);
bool is_mirror_symmetric(const PrimeField& field, const DiffForm& form);

/// Pulls the form back along the rotation (x, y) -> (cx - sy, sx + cy) and
/// rotates (P, Q) by the inverse matrix, so the result is again Poincare.
/// Throws NotARotation unless c^2 + s^2 = 1.
DiffForm rotate(const PrimeField& field, const DiffForm& form, FieldElement c, FieldElement s);

/// ((1-t^2)/(1+t^2), 2t/(1+t^2)), or nullopt when 1 + t^2 = 0.
std::optional<std::pair<FieldElement, FieldElement>> rotation_from_parameter(
    const PrimeField& field, FieldElement t);

/// Q_x - P_y = 0.
bool is_exact(const PrimeField& field, const DiffForm& form);

/// P and Q as polynomials in x, y; homogenized with z when requested.
std::pair<Polynomial, Polynomial> to_polynomials(const PrimeField& field, const DiffForm& form,
                                                 bool homogeneous = false);

/// Inverse of to_polynomials for affine P, Q. Throws std::invalid_argument when
/// a polynomial uses z or exceeds the degree.
DiffForm from_polynomials(const Polynomial& p, const Polynomial& q, int degree);

}  // namespace focal
