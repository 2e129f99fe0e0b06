#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>

#include "focal/prime_field.hpp"

namespace focal {

enum class Var { X = 0, Y = 1, Z = 2 };

/// Exponent vector of x^a y^b z^c. Ordered lexicographically with x > y > z.
struct Monomial {
  std::array<int, 3> exp{};

  constexpr int degree() const noexcept { return exp[0] + exp[1] + exp[2]; }
  constexpr int operator[](Var v) const noexcept { return exp[static_cast<int>(v)]; }

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

constexpr Monomial monomial(int x, int y, int z = 0) noexcept { return Monomial{{x, y, z}}; }

/// Sparse polynomial in x, y, z over F_p. Only nonzero terms are stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, FieldElement>;

  explicit Polynomial(PrimeField field) : field_(field) {}

  static Polynomial constant(const PrimeField& field, FieldElement c);
  static Polynomial variable(const PrimeField& field, Var v);
  static Polynomial term(const PrimeField& field, FieldElement c, Monomial m);

  const PrimeField& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Largest total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  int degree_in(Var v) const noexcept;
  bool is_homogeneous() const noexcept;
  bool uses(Var v) const noexcept { return degree_in(v) > 0; }

  FieldElement coeff(Monomial m) const noexcept;
  void set_coeff(Monomial m, FieldElement c);
  void add_to_coeff(Monomial m, FieldElement c);

  /// Lexicographically largest monomial; requires a nonzero polynomial.
  const Terms::value_type& leading_term() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  Polynomial scaled(FieldElement c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(Var v) const;
  Polynomial power(int e) const;
  FieldElement evaluate(FieldElement x, FieldElement y, FieldElement z) const;

  /// Simultaneous substitution x -> images[0], y -> images[1], z -> images[2].
  Polynomial substitute(const std::array<Polynomial, 3>& images) const;
  /// Fixes one variable to a constant.
  Polynomial specialize(Var v, FieldElement value) const;
  /// z^d f(x/z, y/z); requires degree() <= d and no z.
  Polynomial homogenize(int d) const;
  Polynomial homogeneous_part(int d) const;

 private:
  void check_same_field(const Polynomial& o) const;

  PrimeField field_;
  Terms terms_;
};

/// Quotient of an exact division, or nullopt when divisor does not divide
/// dividend. Multivariate long division by a single divisor in lex order.
std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor);

}  // namespace focal
