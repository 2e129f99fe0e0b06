#pragma once

#include <utility>

#include "focal/errors.hpp"
#include "focal/prime_field.hpp"
#include "focal/ring.hpp"

namespace focal {

/// re + eps * e with e^2 = 0.
template <class T>
struct Dual {
  T re{};
  T eps{};

  friend bool operator==(const Dual&, const Dual&) = default;
};

/// Base[e]/(e^2). Evaluating a polynomial map here yields its value and its
/// directional derivative along the e-part in one pass.
template <CoefficientRing Base>
class DualRing {
 public:
  using base_type = typename Base::value_type;
  using value_type = Dual<base_type>;

  explicit DualRing(Base base) : base_(std::move(base)) {}

  const Base& base() const noexcept { return base_; }
  std::uint64_t characteristic() const noexcept { return base_.characteristic(); }

  value_type zero() const { return {base_.zero(), base_.zero()}; }
  value_type one() const { return {base_.one(), base_.zero()}; }
  value_type from_int(std::int64_t n) const { return {base_.from_int(n), base_.zero()}; }
  value_type embed(const base_type& a) const { return {a, base_.zero()}; }
  value_type make(const base_type& re, const base_type& eps) const { return {re, eps}; }

  value_type add(const value_type& a, const value_type& b) const {
    return {base_.add(a.re, b.re), base_.add(a.eps, b.eps)};
  }
  value_type sub(const value_type& a, const value_type& b) const {
    return {base_.sub(a.re, b.re), base_.sub(a.eps, b.eps)};
  }
  value_type neg(const value_type& a) const { return {base_.neg(a.re), base_.neg(a.eps)}; }
  value_type mul(const value_type& a, const value_type& b) const {
    return {base_.mul(a.re, b.re),
            base_.add(base_.mul(a.re, b.eps), base_.mul(a.eps, b.re))};
  }

  bool is_zero(const value_type& a) const { return base_.is_zero(a.re) && base_.is_zero(a.eps); }
  bool equal(const value_type& a, const value_type& b) const {
    return base_.equal(a.re, b.re) && base_.equal(a.eps, b.eps);
  }
  bool is_unit(const value_type& a) const { return !base_.is_zero(a.re); }

  /// (a + b e)^-1 = a^-1 - a^-2 b e. Throws ZeroInverse when a = 0.
  value_type inv(const value_type& a) const {
    if (base_.is_zero(a.re)) throw ZeroInverse();
    const base_type ia = base_.inv(a.re);
    return {ia, base_.neg(base_.mul(base_.mul(ia, ia), a.eps))};
  }

  value_type inverse_of_integer(std::int64_t m) const {
    return {base_.inverse_of_integer(m), base_.zero()};
  }

 private:
  Base base_;
};

using DualNumber = Dual<FieldElement>;
using DualField = DualRing<PrimeField>;

}  // namespace focal
