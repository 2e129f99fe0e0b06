#include "focal/rational.hpp"

#include "focal/errors.hpp"

namespace focal {

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw ZeroInverse();
  return 1 / a;
}

RationalField::value_type RationalField::inverse_of_integer(std::int64_t m) const {
  if (m == 0) throw NonInvertibleDenominator(0);
  value_type r(1);
  mpz_set_si(r.get_den_mpz_t(), static_cast<long>(m));
  r.canonicalize();
  return r;
}

namespace {

FieldElement reduce_integer(const PrimeField& field, const mpz_class& z) {
  const mpz_class p(static_cast<unsigned long>(field.modulus()));
  mpz_class r;
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
  return field.from_uint(mpz_get_ui(r.get_mpz_t()));
}

}  // namespace

FieldElement reduce(const PrimeField& field, const ExactRational& q) {
  const FieldElement den = reduce_integer(field, q.get_den());
  if (den.is_zero()) {
    throw NonInvertibleDenominator(static_cast<std::int64_t>(
        mpz_get_ui(q.get_den_mpz_t()) & 0x7fffffffffffffffULL));
  }
  return field.mul(reduce_integer(field, q.get_num()), field.inv(den));
}

}  // namespace focal
