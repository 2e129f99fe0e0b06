#include "focal/prime_field.hpp"

#include <array>
#include <stdexcept>

namespace focal {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<detail::uint128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                    17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t b : kBases) {
    std::uint64_t x = powmod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), word_sized_(p < (std::uint64_t{1} << 32)) {
  if (p == 2 || p > kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not an odd prime below 2^61");
  }
}

FieldElement PrimeField::inv(FieldElement a) const {
  check(a);
  if (a.value_ == 0) throw ZeroInverse();
  // Extended Euclid on (p, a), tracking only the coefficient of a.
  std::int64_t t0 = 0, t1 = 1;
  std::uint64_t r0 = p_, r1 = a.value_;
  while (r1 != 0) {
    const std::uint64_t q = r0 / r1;
    const std::uint64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    // |t| stays below p, so the product fits after the 128-bit widening.
    const auto t2 = static_cast<std::int64_t>(
        static_cast<detail::int128>(t0) - static_cast<detail::int128>(q) * t1);
    t0 = t1;
    t1 = t2;
  }
  return from_int(t0);
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const noexcept {
  check(a);
  return FieldElement{powmod(a.value_, e, p_)};
}

FieldElement PrimeField::inverse_of_integer(std::int64_t m) const {
  const FieldElement r = from_int(m);
  if (r.is_zero()) throw NonInvertibleDenominator(m);
  return inv(r);
}

std::string to_string(const PrimeField& field, FieldElement a) {
  return std::to_string(field.symmetric(a));
}

}  // namespace focal
