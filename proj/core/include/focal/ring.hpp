#pragma once

#include <concepts>
#include <cstdint>

namespace focal {

/// The operations the focal-value recurrence needs from its coefficient ring.
/// Elements are plain values; the ring object carries any context (modulus).
template <class R>
concept CoefficientRing = requires(const R& r, typename R::value_type a,
                                   std::int64_t n) {
  typename R::value_type;
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.from_int(n) } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.equal(a, a) } -> std::convertible_to<bool>;
  { r.inverse_of_integer(n) } -> std::convertible_to<typename R::value_type>;
  { r.characteristic() } -> std::convertible_to<std::uint64_t>;
};

}  // namespace focal
