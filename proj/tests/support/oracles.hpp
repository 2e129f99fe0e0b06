#pragma once

// Reference computations that share no code with the library.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace focal::oracle {

// Determinant mod p by cofactor expansion along the first row.
inline std::int64_t det_mod(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return ((m[0][0] % p) + p) % p;
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const std::int64_t term = m[0][c] % p * det_mod(minor, p) % p;
    total = (total + (c % 2 == 0 ? term : p - term)) % p;
  }
  return ((total % p) + p) % p;
}

// Rank as the largest size of a nonvanishing minor.
inline std::size_t rank_by_minors(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t best = 0;
  for (std::uint32_t rmask = 1; rmask < (1u << rows); ++rmask) {
    for (std::uint32_t cmask = 1; cmask < (1u << cols); ++cmask) {
      const int rc = __builtin_popcount(rmask);
      if (rc != __builtin_popcount(cmask) || static_cast<std::size_t>(rc) <= best) continue;
      std::vector<std::vector<std::int64_t>> sub;
      for (std::size_t r = 0; r < rows; ++r) {
        if ((rmask >> r & 1u) == 0) continue;
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < cols; ++c) {
          if ((cmask >> c & 1u) != 0) row.push_back(m[r][c]);
        }
        sub.push_back(row);
      }
      if (det_mod(sub, p) != 0) best = static_cast<std::size_t>(rc);
    }
  }
  return best;
}

// Coefficients of a cubic form keyed by (i, j); missing entries are zero.
using Coeffs = std::map<std::pair<int, int>, mpq_class>;

inline mpq_class get(const Coeffs& c, int i, int j) {
  const auto it = c.find({i, j});
  return it == c.end() ? mpq_class(0) : it->second;
}

// First focal value of a form of degree <= 3, written with denominator 3.
inline mpq_class first_focal(const Coeffs& p, const Coeffs& q) {
  auto P = [&](int i, int j) { return get(p, i, j); };
  auto Q = [&](int i, int j) { return get(q, i, j); };
  const mpq_class three_s1 = 2 * P(0, 2) * Q(0, 2) + P(0, 2) * P(1, 1) - Q(0, 2) * Q(1, 1) +
                            P(1, 1) * P(2, 0) - Q(1, 1) * Q(2, 0) - 2 * P(2, 0) * Q(2, 0) -
                            3 * P(0, 3) + Q(1, 2) - P(2, 1) + 3 * Q(3, 0);
  return three_s1 / 3;
}

// Dense bivariate polynomial over Q keyed by exponents.
using Series = std::map<std::pair<int, int>, mpq_class>;

inline Series multiply(const Series& a, const Series& b) {
  Series r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) r[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  }
  return r;
}

inline Series derivative(const Series& a, int var) {
  Series r;
  for (const auto& [e, c] : a) {
    const int k = var == 0 ? e.first : e.second;
    if (k == 0) continue;
    const std::pair<int, int> d = var == 0 ? std::pair{e.first - 1, e.second}
                                           : std::pair{e.first, e.second - 1};
    r[d] += c * k;
  }
  return r;
}

}  // namespace focal::oracle
