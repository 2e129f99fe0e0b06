#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>

#include "focal/errors.hpp"

namespace focal {

namespace detail {
__extension__ typedef unsigned __int128 uint128;
__extension__ typedef __int128 int128;
}  // namespace detail

/// A residue in [0, p). The modulus lives in the owning PrimeField.
class FieldElement {
 public:
  constexpr FieldElement() = default;

  constexpr std::uint64_t value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  friend class PrimeField;
  explicit constexpr FieldElement(std::uint64_t v) noexcept : value_(v) {}

  std::uint64_t value_ = 0;
};

/// Arithmetic context for F_p with p an odd prime below 2^61.
///
/// Elements carry no modulus; every operation goes through the field that
/// created them. Debug builds assert that operands are reduced for this
/// modulus, which catches most accidental mixing of contexts.
class PrimeField {
 public:
  using value_type = FieldElement;

  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 61) - 1;

  /// Throws std::invalid_argument unless p is an odd prime <= 2^61 - 1.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }

  FieldElement zero() const noexcept { return FieldElement{}; }
  FieldElement one() const noexcept { return FieldElement{1}; }

  /// Wraps a value already known to lie in [0, p).
  FieldElement element(std::uint64_t v) const {
    if (v >= p_) throw std::out_of_range("residue not reduced");
    return FieldElement{v};
  }
  FieldElement from_int(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return FieldElement{static_cast<std::uint64_t>(r)};
  }
  FieldElement from_uint(std::uint64_t v) const noexcept {
    return FieldElement{v % p_};
  }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    check(a);
    check(b);
    std::uint64_t s = a.value_ + b.value_;
    if (s >= p_) s -= p_;
    return FieldElement{s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    check(a);
    check(b);
    return FieldElement{a.value_ >= b.value_ ? a.value_ - b.value_
                                             : a.value_ + p_ - b.value_};
  }
  FieldElement neg(FieldElement a) const noexcept {
    check(a);
    return FieldElement{a.value_ == 0 ? 0 : p_ - a.value_};
  }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    check(a);
    check(b);
    if (word_sized_) return FieldElement{(a.value_ * b.value_) % p_};
    const auto wide = static_cast<detail::uint128>(a.value_) * b.value_;
    return FieldElement{static_cast<std::uint64_t>(wide % p_)};
  }

  /// Extended Euclid. Throws ZeroInverse for a = 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

  /// Inverse of the integer m; throws NonInvertibleDenominator when p | m.
  FieldElement inverse_of_integer(std::int64_t m) const;

  bool is_zero(FieldElement a) const noexcept { return a.value_ == 0; }
  bool equal(FieldElement a, FieldElement b) const noexcept { return a == b; }

  /// Representative in [-(p-1)/2, (p-1)/2].
  std::int64_t symmetric(FieldElement a) const noexcept {
    check(a);
    return a.value_ > p_ / 2 ? static_cast<std::int64_t>(a.value_) -
                                   static_cast<std::int64_t>(p_)
                             : static_cast<std::int64_t>(a.value_);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  void check([[maybe_unused]] FieldElement a) const noexcept {
    assert(a.value_ < p_ && "field element from a different context");
  }

  std::uint64_t p_;
  bool word_sized_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

std::string to_string(const PrimeField& field, FieldElement a);

}  // namespace focal
