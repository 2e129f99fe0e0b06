#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "focal/dual.hpp"
#include "focal/errors.hpp"
#include "focal/form.hpp"
#include "focal/prime_field.hpp"
#include "focal/rational.hpp"
#include "focal/ring.hpp"

namespace focal {

/// alpha(i, n) = prod_{k=1..i} (n - (2k-1)) / (2k-1).
template <CoefficientRing R>
typename R::value_type alpha(const R& ring, int i, int n) {
  auto r = ring.one();
  for (int k = 1; k <= i; ++k) {
    r = ring.mul(r, ring.mul(ring.from_int(n - (2 * k - 1)), ring.inverse_of_integer(2 * k - 1)));
  }
  return r;
}

/// Largest K with 2K + 2 < p, i.e. (p - 3) / 2.
constexpr int default_focal_count(std::uint64_t p) noexcept {
  return p < 5 ? 0 : static_cast<int>((p - 3) / 2);
}

/// Per-(ring, K) constants of the recurrence: every a_{n-l,l} is a fixed
/// linear combination of the c_{m,n-m}, and s_k one of the c at n = 2k+2.
template <CoefficientRing R>
class FrommerTables {
 public:
  using value_type = typename R::value_type;

  struct Weight {
    int index;  // x-exponent m of c_{m,n-m}
    value_type weight;
  };

  /// Throws CharacteristicTooSmall when 0 < char <= 2K + 2.
  FrommerTables(R ring, int max_k) : ring_(std::move(ring)), max_k_(max_k) {
    if (max_k < 0) throw std::invalid_argument("focal count must be non-negative");
    const std::uint64_t ch = ring_.characteristic();
    if (ch != 0 && ch <= static_cast<std::uint64_t>(2 * max_k + 2)) {
      throw CharacteristicTooSmall(ch, max_k);
    }
    const int top = top_degree();
    for (int m = -(top + 1); m <= top + 1; ++m) integers_.push_back(ring_.from_int(m));

    a_offsets_.assign(row_start(top + 1) + 1, 0);
    for (int n = 3; n <= top; ++n) {
      for (int l = 0; l <= n; ++l) {
        a_offsets_[row_start(n) + static_cast<std::size_t>(l)] = a_weights_.size();
        append_a_weights(n, l);
      }
      a_offsets_[row_start(n) + static_cast<std::size_t>(n) + 1] = a_weights_.size();
    }
    const value_type half = ring_.inverse_of_integer(2);
    for (int k = 1; k <= max_k; ++k) {
      s_offsets_.push_back(s_weights_.size());
      const int n = 2 * k + 2;
      for (int i = 0; i <= k + 1; ++i) {
        s_weights_.push_back({n - 2 * i, ring_.mul(half, inverse_alpha(i, n))});
      }
    }
    s_offsets_.push_back(s_weights_.size());
  }

  const R& ring() const noexcept { return ring_; }
  int max_k() const noexcept { return max_k_; }
  int top_degree() const noexcept { return 2 * max_k_ + 2; }

  std::span<const Weight> a_weights(int n, int l) const {
    const std::size_t at = row_start(n) + static_cast<std::size_t>(l);
    return {a_weights_.data() + a_offsets_[at], a_offsets_[at + 1] - a_offsets_[at]};
  }
  std::span<const Weight> s_weights(int k) const {
    const auto at = static_cast<std::size_t>(k - 1);
    return {s_weights_.data() + s_offsets_[at], s_offsets_[at + 1] - s_offsets_[at]};
  }
  /// The integer m as a ring element, |m| <= top_degree() + 1.
  const value_type& integer(int m) const {
    return integers_[static_cast<std::size_t>(m + top_degree() + 1)];
  }

 private:
  // Row n of the weight table starts after rows 3..n-1 (each has n+2 slots).
  static std::size_t row_start(int n) noexcept {
    if (n <= 3) return 0;
    const auto m = static_cast<std::size_t>(n);
    return (m * (m + 3) / 2) - 9;
  }

  value_type ratio(int num, int den) const {
    return ring_.mul(ring_.from_int(num), ring_.inverse_of_integer(den));
  }
  value_type inverse_alpha(int i, int n) const {
    auto r = ring_.one();
    for (int k = 1; k <= i; ++k) r = ring_.mul(r, ratio(2 * k - 1, n - (2 * k - 1)));
    return r;
  }

  void append_a_weights(int n, int l) {
    const bool l_even = l % 2 == 0;
    const bool n_even = n % 2 == 0;
    if (l_even && n_even && l < n) {
      for (int i = 1; i <= (n - l) / 2; ++i) {
        auto w = ring_.neg(ring_.inverse_of_integer(n - l));
        for (int j = i; j <= (n - l - 2) / 2; ++j) w = ring_.mul(w, ratio(n - 2 * j, 2 * j));
        a_weights_.push_back({2 * i - 1, w});
      }
    } else if (l == n && n_even) {
      // a_{0,n} = 0.
    } else if (!l_even && n_even) {
      const int lo = std::min((l - 1) / 2, (n - l - 1) / 2);
      const auto scale = ring_.mul(alpha(ring_, lo, n), ring_.inverse_of_integer(2 * std::min(l, n - l)));
      for (int i = 0; i <= (l - 1) / 2; ++i) {
        a_weights_.push_back({n - 2 * i, ring_.mul(scale, inverse_alpha(i, n))});
      }
      for (int j = (l - 1) / 2 + 1; j <= n / 2; ++j) {
        a_weights_.push_back({n - 2 * j, ring_.neg(ring_.mul(scale, inverse_alpha(j, n)))});
      }
    } else if (!l_even && !n_even) {
      for (int i = 0; i <= (l - 1) / 2; ++i) {
        auto w = ring_.inverse_of_integer(l);
        for (int j = i; j <= (l - 3) / 2; ++j) w = ring_.mul(w, ratio(n - 2 * j - 1, 2 * j + 1));
        a_weights_.push_back({n - 2 * i, w});
      }
    } else {
      for (int i = 0; i <= (n - l - 1) / 2; ++i) {
        auto w = ring_.neg(ring_.inverse_of_integer(n - l));
        for (int j = i; j <= (n - l - 3) / 2; ++j) w = ring_.mul(w, ratio(n - 2 * j - 1, 2 * j + 1));
        a_weights_.push_back({2 * i, w});
      }
    }
  }

  R ring_;
  int max_k_;
  std::vector<value_type> integers_;
  std::vector<Weight> a_weights_;
  std::vector<std::size_t> a_offsets_;
  std::vector<Weight> s_weights_;
  std::vector<std::size_t> s_offsets_;
};

/// Degree-by-degree evaluation of the power series F = (x^2 + y^2)/2 + ...
/// whose obstruction terms are the focal values. One workspace per thread;
/// after construction reset()/next() do not allocate for forms of degree <= 3.
template <CoefficientRing R>
class FrommerWorkspace {
 public:
  using value_type = typename R::value_type;
  using form_type = BasicDiffForm<value_type>;

  /// The tables must outlive the workspace.
  explicit FrommerWorkspace(const FrommerTables<R>& tables)
      : tables_(&tables),
        a_(form_type::size_for(tables.top_degree()), tables.ring().zero()),
        c_(static_cast<std::size_t>(tables.top_degree()) + 1, tables.ring().zero()) {
    terms_.reserve(form_type::size_for(3));
  }

  /// Starts a new evaluation. Throws NotPoincare on a wrong linear part.
  void reset(const form_type& form) {
    const R& ring = tables_->ring();
    if (!has_poincare_linear_part(ring, form)) {
      throw NotPoincare("form does not have linear part x dx + y dy");
    }
    terms_.clear();
    for (int n = 2; n <= form.degree(); ++n) {
      for (int j = 0; j <= n; ++j) {
        const int i = n - j;
        if (ring.is_zero(form.p(i, j)) && ring.is_zero(form.q(i, j))) continue;
        terms_.push_back({i, j, form.p(i, j), form.q(i, j)});
      }
    }
    for (int n = 0; n <= 2; ++n) {
      for (int j = 0; j <= n; ++j) a_[form_type::index(n - j, j)] = ring.zero();
    }
    a_[form_type::index(2, 0)] = ring.one();
    a_[form_type::index(0, 2)] = ring.one();
    computed_ = 0;
  }

  const FrommerTables<R>& tables() const noexcept { return *tables_; }

  /// Focal values produced since the last reset.
  int computed() const noexcept { return computed_; }

  /// Next focal value s_k, k = computed() + 1.
  value_type next() {
    if (computed_ >= tables_->max_k()) throw std::out_of_range("focal count exhausted");
    const int k = ++computed_;
    step(2 * k + 1);
    step(2 * k + 2);
    const R& ring = tables_->ring();
    value_type s = ring.zero();
    for (const auto& w : tables_->s_weights(k)) {
      s = ring.add(s, ring.mul(w.weight, c_[static_cast<std::size_t>(w.index)]));
    }
    return s;
  }

  /// Power-series coefficient a_ij; final for i + j <= 2 * computed() + 2.
  const value_type& a(int i, int j) const { return a_[form_type::index(i, j)]; }

 private:
  struct Term {
    int i;
    int j;
    value_type p;
    value_type q;
  };

  void step(int n) {
    const R& ring = tables_->ring();
    for (int l = 0; l <= n; ++l) {
      value_type acc = ring.zero();
      for (const Term& t : terms_) {
        if (t.i + t.j > n) continue;
        const int ai = l - t.i;
        const int aj = n - l - t.j + 1;
        if (ai >= 0 && aj >= 0) {
          acc = ring.sub(acc, ring.mul(tables_->integer(aj), ring.mul(t.p, a(ai, aj))));
        }
        const int bi = l - t.i + 1;
        const int bj = n - l - t.j;
        if (bi >= 0 && bj >= 0) {
          acc = ring.add(acc, ring.mul(tables_->integer(bi), ring.mul(t.q, a(bi, bj))));
        }
      }
      c_[static_cast<std::size_t>(l)] = acc;
    }
    for (int l = 0; l <= n; ++l) {
      value_type v = ring.zero();
      for (const auto& w : tables_->a_weights(n, l)) {
        v = ring.add(v, ring.mul(w.weight, c_[static_cast<std::size_t>(w.index)]));
      }
      a_[form_type::index(n - l, l)] = v;
    }
  }

  const FrommerTables<R>* tables_;
  std::vector<value_type> a_;
  std::vector<value_type> c_;
  std::vector<Term> terms_;
  int computed_ = 0;
};

/// s_1..s_K of one form, with the index of the first nonzero value.
template <class T>
struct BasicFocalSequence {
  std::vector<T> values;
  std::uint64_t characteristic = 0;
  std::optional<int> first_nonzero;

  int count() const noexcept { return static_cast<int>(values.size()); }
  /// s_k for 1 <= k <= count().
  const T& operator[](int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

using FocalSequence = BasicFocalSequence<FieldElement>;

/// Smallest k with s_k != 0, or nullopt when all values vanish.
template <CoefficientRing R>
std::optional<int> first_nonzero_index(const R& ring,
                                       const std::vector<typename R::value_type>& values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!ring.is_zero(values[k])) return static_cast<int>(k) + 1;
  }
  return std::nullopt;
}

template <CoefficientRing R>
BasicFocalSequence<typename R::value_type> focal_values(FrommerWorkspace<R>& ws,
                                                        const FrommerTables<R>& tables,
                                                        const BasicDiffForm<typename R::value_type>& form,
                                                        int k) {
  if (k > tables.max_k()) throw std::out_of_range("focal count exceeds table size");
  ws.reset(form);
  BasicFocalSequence<typename R::value_type> seq;
  seq.characteristic = tables.ring().characteristic();
  seq.values.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) seq.values.push_back(ws.next());
  seq.first_nonzero = first_nonzero_index(tables.ring(), seq.values);
  return seq;
}

/// One-shot evaluation; builds its own tables.
template <CoefficientRing R>
BasicFocalSequence<typename R::value_type> focal_values(
    const R& ring, const BasicDiffForm<typename R::value_type>& form, int k) {
  const FrommerTables<R> tables(ring, k);
  FrommerWorkspace<R> ws(tables);
  return focal_values(ws, tables, form, k);
}

/// Evaluates s_1, s_2, ... and stops at the first nonzero value.
template <CoefficientRing R>
std::optional<int> first_nonzero(FrommerWorkspace<R>& ws,
                                 const BasicDiffForm<typename R::value_type>& form, int k) {
  const R& ring = ws.tables().ring();
  ws.reset(form);
  for (int i = 1; i <= k; ++i) {
    if (!ring.is_zero(ws.next())) return i;
  }
  return std::nullopt;
}

/// Focal values over F_p; K defaults to (p - 3) / 2.
FocalSequence focal_values(const PrimeField& field, const DiffForm& form,
                           std::optional<int> k = std::nullopt);

extern template class FrommerTables<PrimeField>;
extern template class FrommerTables<DualField>;
extern template class FrommerTables<RationalField>;
extern template class FrommerWorkspace<PrimeField>;
extern template class FrommerWorkspace<DualField>;
extern template class FrommerWorkspace<RationalField>;

}  // namespace focal
