#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "focal/form.hpp"
#include "focal/polynomial.hpp"

namespace focal {

struct ParseOptions {
  /// Form degree; defaults to the largest degree present (at least 1).
  std::optional<int> degree;
  /// Reject forms whose linear part is not x dx + y dy.
  bool strict = false;
};

/// Parses text such as "(x - 9x^2 + 2xy)dx + (y + x^2)dy" or "x dx + y dy".
///
/// Grammar (whitespace is ignored):
///   expr    := term (("+" | "-") term)*
///   term    := factor (["*" | "/"] factor)*
///   factor  := ("+" | "-") factor | primary ["^" integer]
///   primary := integer | "x" | "y" | "z" | "dx" | "dy" | "(" expr ")"
/// Juxtaposition multiplies. Division is only by nonzero constants. The
/// result must be linear in dx, dy. If z occurs, P and Q must be homogeneous
/// of one degree d; they are dehomogenized at z = 1 and d becomes the degree.
DiffForm parse_form(const PrimeField& field, std::string_view text, ParseOptions options = {});

/// Parses a polynomial in x, y, z with the same grammar (no dx, dy).
Polynomial parse_polynomial(const PrimeField& field, std::string_view text);

/// Terms by ascending total degree, then descending powers of x and y, with
/// coefficients in (-p/2, p/2). parse_form(format_form(f), {f.degree()})
/// returns f.
std::string format_form(const PrimeField& field, const DiffForm& form);
std::string format_polynomial(const PrimeField& field, const Polynomial& poly);

}  // namespace focal
