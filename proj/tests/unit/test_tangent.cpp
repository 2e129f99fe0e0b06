#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "example_forms.hpp"
#include "focal/form_io.hpp"
#include "focal/tangent.hpp"

namespace focal {
namespace {

TEST(Tangent, ExampleCodimensions) {
  const PrimeField f23(23);
  const std::pair<const char*, std::size_t> cases[] = {
      {testdata::kHamiltonian, 5}, {testdata::kCubicLine, 6},  {testdata::kTwoConics, 7},
      {testdata::kConicTwoLines, 7}, {testdata::kFourLines, 7}, {testdata::kSymmetric, 6}};
  TangentComputer computer(f23, 10);
  for (const auto& [text, codim] : cases) {
    EXPECT_EQ(computer.codim_at(parse_form(f23, text), 10), codim) << text;
  }
  const PrimeField f37(37);
  EXPECT_EQ(codim_at(f37, parse_form(f37, testdata::kReversible), 17), 7u);
}

TEST(Tangent, GradientOfFirstFocalValueAtLinearForm) {
  const PrimeField f(23);
  const TangentReport report = jacobian(f, linear_form(f, 3), 1);
  ASSERT_EQ(report.jacobian.rows(), 1u);
  ASSERT_EQ(report.jacobian.cols(), 14u);
  const FieldElement third = f.inverse_of_integer(3);
  for (std::size_t v = 0; v < report.directions.size(); ++v) {
    const std::string name = report.directions[v].name();
    FieldElement expected = f.zero();
    if (name == "p03") expected = f.from_int(-1);
    if (name == "q30") expected = f.one();
    if (name == "p21") expected = f.neg(third);
    if (name == "q12") expected = third;
    EXPECT_EQ(report.jacobian(0, v), expected) << name;
  }
  EXPECT_EQ(report.codim, 1u);
}

TEST(Tangent, RejectsPointsOffTheVariety) {
  const PrimeField f(23);
  const DiffForm witness = parse_form(f, testdata::kWitness);
  EXPECT_EQ(codim_at(f, witness, 9), 9u);
  try {
    (void)codim_at(f, witness, 10);
    FAIL() << "expected NotOnVariety";
  } catch (const NotOnVariety& e) {
    EXPECT_EQ(e.index(), 10);
  }
  EXPECT_THROW(codim_at(PrimeField(11), witness, 5), CharacteristicTooSmall);
}

TEST(Tangent, DirectionalDerivativeIsLinear) {
  const PrimeField f(23);
  const DualField d(f);
  const DiffForm form = parse_form(f, testdata::kFourLines);
  const TangentReport report = jacobian(f, form, 10);
  SampleStream rng(2);
  for (int t = 0; t < 100; ++t) {
    const std::size_t v = rng.next() % report.directions.size();
    const FieldElement scale = rng.residue(f);
    auto lifted = form.transform([&](FieldElement x) { return d.embed(x); });
    coefficient(lifted, report.directions[v]).eps = scale;
    const auto seq = focal_values(d, lifted, 10);
    for (int j = 1; j <= 10; ++j) {
      EXPECT_EQ(seq[j].eps, f.mul(scale, report.jacobian(static_cast<std::size_t>(j - 1), v)));
    }
  }
}

TEST(Tangent, RowsDoNotDependOnK) {
  const PrimeField f(23);
  const DiffForm form = parse_form(f, testdata::kHamiltonian);
  const TangentReport full = jacobian(f, form, 10);
  for (int k = 1; k < 10; ++k) {
    const TangentReport partial = jacobian(f, form, k);
    for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r) {
      for (std::size_t c = 0; c < 14; ++c) EXPECT_EQ(partial.jacobian(r, c), full.jacobian(r, c));
    }
  }
}

TEST(Tangent, RankIgnoresColumnOrder) {
  const PrimeField f(23);
  const TangentReport report = jacobian(f, parse_form(f, testdata::kTwoConics), 10);
  std::vector<std::size_t> perm(report.jacobian.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::mt19937 gen(1);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(perm.begin(), perm.end(), gen);
    MatrixFp shuffled(report.jacobian.rows(), report.jacobian.cols());
    for (std::size_t r = 0; r < shuffled.rows(); ++r) {
      for (std::size_t c = 0; c < shuffled.cols(); ++c) shuffled(r, c) = report.jacobian(r, perm[c]);
    }
    EXPECT_EQ(rank_mod_p(f, shuffled), report.codim);
  }
}

TEST(Tangent, HomogeneousDirections) {
  const PrimeField f(17);
  const TangentReport report = jacobian(f, linear_form(f, 3), 1, {.homogeneous_only = true});
  EXPECT_EQ(report.jacobian.cols(), 8u);
  EXPECT_EQ(report.codim, 1u);
}

}  // namespace
}  // namespace focal
