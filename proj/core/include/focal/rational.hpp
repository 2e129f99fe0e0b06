#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "focal/prime_field.hpp"

namespace focal {

/// Arbitrary-precision rational, always canonical (reduced, positive denominator).
using ExactRational = mpq_class;

/// Q as a coefficient ring. Used as the characteristic-zero reference.
class RationalField {
 public:
  using value_type = ExactRational;

  std::uint64_t characteristic() const noexcept { return 0; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(std::int64_t n) const {
    value_type r;
    mpz_set_si(r.get_num_mpz_t(), static_cast<long>(n));
    return r;
  }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type inverse_of_integer(std::int64_t m) const;
};

/// Image of q under Z_(p) -> F_p. Throws NonInvertibleDenominator when p divides
/// the denominator (the offending value is reported modulo 2^63).
FieldElement reduce(const PrimeField& field, const ExactRational& q);

}  // namespace focal
