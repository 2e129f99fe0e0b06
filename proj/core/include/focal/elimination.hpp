#pragma once

#include <vector>

#include "focal/polynomial.hpp"

namespace focal {

/// Res_y(f, g) for f, g in F_p[x, y], as a polynomial in x.
Polynomial resultant_y(const Polynomial& f, const Polynomial& g);

/// Common zero of polynomials in x, y in the affine plane over the algebraic
/// closure of F_p. The empty system and the zero polynomial vanish everywhere.
///
/// Pairs are sheared so both leading y-coefficients are constants, split along
/// their gcd, and then eliminated by the resultant in y. The remaining
/// polynomials are tested at its roots by gcd computations over
/// F_p[x]/(radical), splitting the modulus whenever a zero divisor appears.
/// Throws DegenerateInput when p is too small to find a shear.
bool has_affine_common_zero(const PrimeField& field, const std::vector<Polynomial>& polys);

/// Common zero of binary forms in x, y on the projective line.
bool has_line_common_zero(const PrimeField& field, const std::vector<Polynomial>& forms);

/// Common zero of forms in x, y, z in the projective plane: the chart z = 1
/// plus the line z = 0.
bool has_projective_common_zero(const PrimeField& field, const std::vector<Polynomial>& forms);

}  // namespace focal
