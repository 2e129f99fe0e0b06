#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "focal/dual.hpp"
#include "focal/matrix.hpp"
#include "focal/prime_field.hpp"
#include "focal/rational.hpp"
#include "oracles.hpp"

namespace focal {
namespace {

constexpr std::uint64_t kPrimes[] = {11, 17, 23, 29, 37};

TEST(PrimeField, RejectsNonPrimeModulus) {
  EXPECT_THROW(PrimeField(2), std::invalid_argument);
  EXPECT_THROW(PrimeField(15), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(PrimeField::kMaxModulus));
}

TEST(PrimeField, InverseExamples) {
  const PrimeField f11(11);
  const PrimeField f23(23);
  EXPECT_EQ(f11.inv(f11.from_int(2)).value(), 6u);
  EXPECT_EQ(f23.inv(f23.one()).value(), 1u);
  EXPECT_EQ(f23.inv(f23.from_int(22)).value(), 22u);
  EXPECT_THROW(f23.inv(f23.zero()), ZeroInverse);
}

TEST(PrimeField, InverseOfIntegerRejectsMultiplesOfP) {
  const PrimeField f(23);
  EXPECT_EQ(f.mul(f.inverse_of_integer(7), f.from_int(7)), f.one());
  try {
    (void)f.inverse_of_integer(46);
    FAIL() << "expected NonInvertibleDenominator";
  } catch (const NonInvertibleDenominator& e) {
    EXPECT_EQ(e.denominator(), 46);
  }
}

TEST(PrimeField, LargeModulusUsesWideProducts) {
  const PrimeField f(PrimeField::kMaxModulus);
  const FieldElement a = f.from_uint(PrimeField::kMaxModulus - 2);
  EXPECT_EQ(f.mul(a, a).value(), 4u);
  EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
}

TEST(PrimeField, AxiomsOnRandomTriples) {
  std::mt19937_64 gen(7);
  for (std::uint64_t p : kPrimes) {
    const PrimeField f(p);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (int t = 0; t < 10000; ++t) {
      const FieldElement a = f.from_uint(dist(gen));
      const FieldElement b = f.from_uint(dist(gen));
      const FieldElement c = f.from_uint(dist(gen));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
      EXPECT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
      if (!a.is_zero()) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    }
  }
}

TEST(PrimeField, SymmetricRepresentative) {
  const PrimeField f(23);
  EXPECT_EQ(f.symmetric(f.from_int(-9)), -9);
  EXPECT_EQ(f.symmetric(f.from_int(11)), 11);
  EXPECT_EQ(f.symmetric(f.from_int(12)), -11);
}

TEST(DualRing, InverseExamples) {
  const DualField d23{PrimeField(23)};
  const PrimeField& f23 = d23.base();
  auto r = d23.inv(d23.make(f23.one(), f23.from_int(5)));
  EXPECT_EQ(r.re.value(), 1u);
  EXPECT_EQ(r.eps.value(), 18u);

  const DualField d11{PrimeField(11)};
  const PrimeField& f11 = d11.base();
  r = d11.inv(d11.make(f11.from_int(2), f11.zero()));
  EXPECT_EQ(r.re.value(), 6u);
  EXPECT_EQ(r.eps.value(), 0u);

  // (2 + 3e)^-1 = 1/2 - (3/4) e = 6 + 2e over F_11.
  const DualNumber a = d11.make(f11.from_int(2), f11.from_int(3));
  r = d11.inv(a);
  EXPECT_EQ(r.re.value(), 6u);
  EXPECT_EQ(r.eps.value(), 2u);
  EXPECT_EQ(d11.mul(a, r), d11.one());

  EXPECT_THROW(d11.inv(d11.make(f11.zero(), f11.one())), ZeroInverse);
}

TEST(DualRing, ProductsMatchHandFormulas) {
  std::mt19937_64 gen(11);
  for (std::uint64_t p : kPrimes) {
    const DualField d{PrimeField(p)};
    const PrimeField& f = d.base();
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    const DualNumber eps = d.make(f.zero(), f.one());
    EXPECT_TRUE(d.is_zero(d.mul(eps, eps)));
    for (int t = 0; t < 10000; ++t) {
      const auto a = f.from_uint(dist(gen));
      const auto b = f.from_uint(dist(gen));
      const auto c = f.from_uint(dist(gen));
      const auto e = f.from_uint(dist(gen));
      const DualNumber x = d.make(a, b);
      const DualNumber y = d.make(c, e);
      const DualNumber prod = d.mul(x, y);
      EXPECT_EQ(prod.re, f.mul(a, c));
      EXPECT_EQ(prod.eps, f.add(f.mul(a, e), f.mul(b, c)));
      const DualNumber sum = d.add(x, y);
      EXPECT_EQ(sum.re, f.add(a, c));
      EXPECT_EQ(sum.eps, f.add(b, e));
      EXPECT_TRUE(d.is_zero(d.mul(d.make(f.zero(), b), d.make(f.zero(), e))));
      if (!a.is_zero()) EXPECT_EQ(d.mul(x, d.inv(x)), d.one());
    }
  }
}

TEST(Rational, ReductionRejectsDenominatorDivisibleByP) {
  const PrimeField f(23);
  EXPECT_EQ(reduce(f, ExactRational(1, 3)), f.inverse_of_integer(3));
  EXPECT_EQ(reduce(f, ExactRational(-5, 7)), f.mul(f.from_int(-5), f.inverse_of_integer(7)));
  EXPECT_THROW(reduce(f, ExactRational(1, 46)), NonInvertibleDenominator);
}

// Random expression trees evaluated over Q and over F_p must agree after reduction.
TEST(Rational, ExpressionTreesCommuteWithReduction) {
  std::mt19937_64 gen(3);
  const RationalField q;
  int checked = 0;
  for (std::uint64_t p : {11u, 23u, 37u}) {
    const PrimeField f(p);
    for (int t = 0; t < 1000; ++t) {
      bool valid = true;
      std::function<std::pair<ExactRational, FieldElement>(int)> build = [&](int depth) {
        std::uniform_int_distribution<int> leaf(-20, 20);
        if (depth == 0 || gen() % 4 == 0) {
          const int v = leaf(gen);
          return std::pair{q.from_int(v), f.from_int(v)};
        }
        const auto a = build(depth - 1);
        const auto b = build(depth - 1);
        switch (gen() % 4) {
          case 0: return std::pair{q.add(a.first, b.first), f.add(a.second, b.second)};
          case 1: return std::pair{q.sub(a.first, b.first), f.sub(a.second, b.second)};
          case 2: return std::pair{q.mul(a.first, b.first), f.mul(a.second, b.second)};
          default:
            if (b.second.is_zero() || sgn(b.first) == 0) {
              valid = false;
              return a;
            }
            return std::pair{ExactRational(a.first / b.first), f.div(a.second, b.second)};
        }
      };
      const auto [exact, modular] = build(5);
      if (!valid) continue;
      ++checked;
      EXPECT_EQ(reduce(f, exact), modular);
    }
  }
  EXPECT_GT(checked, 1000);
}

MatrixFp from_rows(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& rows) {
  MatrixFp m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = f.from_int(rows[r][c]);
  }
  return m;
}

TEST(Matrix, RankExamples) {
  const PrimeField f(23);
  EXPECT_EQ(rank_mod_p(f, from_rows(f, {{1, 0}, {0, 1}})), 2u);
  EXPECT_EQ(rank_mod_p(f, MatrixFp(3, 14)), 0u);
  EXPECT_EQ(rank_mod_p(f, from_rows(f, {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})), 2u);
  EXPECT_EQ(rank_mod_p(f, MatrixFp(0, 5)), 0u);
  EXPECT_THROW(MatrixFp(2, 2, std::vector<FieldElement>(3)), std::invalid_argument);
}

TEST(Matrix, RankMatchesMinorOracle) {
  const PrimeField f(5);
  std::mt19937_64 gen(5);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rows = 1 + gen() % 4;
    const std::size_t cols = 1 + gen() % 4;
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    // Bias toward zeros so that rank-deficient matrices are common.
    for (auto& row : m) {
      for (auto& v : row) v = gen() % 3 == 0 ? 0 : static_cast<std::int64_t>(gen() % 5);
    }
    EXPECT_EQ(rank_mod_p(f, from_rows(f, m)), oracle::rank_by_minors(m, 5));
  }
}

TEST(Matrix, SolveExamples) {
  const PrimeField f(23);
  const std::vector<FieldElement> e1 = {f.one(), f.zero(), f.zero()};
  const auto x = solve_mod_p(f, from_rows(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), e1);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, e1);
  EXPECT_FALSE(solve_mod_p(f, MatrixFp(2, 2), std::vector{f.one(), f.zero()}).has_value());
  const auto z = solve_mod_p(f, from_rows(f, {{1, 2}, {3, 4}, {5, 6}}),
                             std::vector<FieldElement>(3));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(*z, std::vector<FieldElement>(2));
}

TEST(Matrix, SolveReproducesRandomConsistentSystems) {
  const PrimeField f(17);
  std::mt19937_64 gen(13);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + gen() % 6;
    const std::size_t cols = 1 + gen() % 6;
    MatrixFp m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_uint(gen() % 3 == 0 ? 0 : gen());
    }
    std::vector<FieldElement> x0(cols);
    for (auto& v : x0) v = f.from_uint(gen());
    std::vector<FieldElement> rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) rhs[r] = f.add(rhs[r], f.mul(m(r, c), x0[c]));
    }
    const auto x = solve_mod_p(f, m, rhs);
    ASSERT_TRUE(x.has_value());
    for (std::size_t r = 0; r < rows; ++r) {
      FieldElement acc;
      for (std::size_t c = 0; c < cols; ++c) acc = f.add(acc, f.mul(m(r, c), (*x)[c]));
      EXPECT_EQ(acc, rhs[r]);
    }
  }
}

}  // namespace
}  // namespace focal
