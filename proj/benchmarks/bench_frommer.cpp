#include <benchmark/benchmark.h>

#include <vector>

#include "focal/census.hpp"
#include "focal/elimination.hpp"
#include "focal/form_io.hpp"
#include "focal/frommer.hpp"
#include "focal/tangent.hpp"

namespace {

using namespace focal;

std::vector<DiffForm> sample_forms(const PrimeField& field, int degree, std::size_t count,
                                   RandomFormOptions options = {}) {
  std::vector<DiffForm> out;
  for (std::size_t i = 0; i < count; ++i) {
    SampleStream rng = SampleStream::for_sample(42, i);
    out.push_back(random_poincare(field, degree, rng, options));
  }
  return out;
}

// All K values, no early exit.
void BM_FocalValues(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const PrimeField field(p);
  const FrommerTables<PrimeField> tables(field, k);
  FrommerWorkspace<PrimeField> ws(tables);
  const auto forms = sample_forms(field, 3, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(focal_values(ws, tables, forms[i++ % forms.size()], k));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FocalValues)->Args({23, 10})->Args({37, 17});

// The census filter: stop at the first nonzero value.
void BM_FirstNonzero(benchmark::State& state) {
  const PrimeField field(23);
  const FrommerTables<PrimeField> tables(field, 10);
  FrommerWorkspace<PrimeField> ws(tables);
  const auto forms = sample_forms(field, 3, 256, {.solve_s1 = state.range(0) != 0});
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(first_nonzero(ws, forms[i++ % forms.size()], 10));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FirstNonzero)->Arg(0)->Arg(1);

void BM_TangentCodim(benchmark::State& state) {
  const PrimeField field(23);
  TangentComputer computer(field, 10);
  const DiffForm form = parse_form(
      field,
      "(x - 11x^2 + 3xy - 2y^2 - 3x^3 + 9x^2y - 5xy^2 - 11y^3)dx"
      " + (y + 5x^2 + 8xy - 11y^2 + 4x^3 - 4x^2y + 8xy^2 + 7y^3)dy");
  for (auto _ : state) benchmark::DoNotOptimize(computer.codim_at(form, 10));
}
BENCHMARK(BM_TangentCodim);

// Full pipeline on one thread: sample, filter, classify survivors.
void BM_CensusPipeline(benchmark::State& state) {
  CensusConfig config;
  config.prime = 23;
  config.degree = 3;
  config.focal_count = 10;
  config.samples = static_cast<std::uint64_t>(state.range(0));
  config.checkpoint_interval = config.samples;
  for (auto _ : state) benchmark::DoNotOptimize(run_census(config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CensusPipeline)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ProjectiveCommonZero(benchmark::State& state) {
  const PrimeField field(23);
  const std::vector<Polynomial> system = {
      parse_polynomial(field, "-6x^2 - 7xy - 10y^2 + 6xz - 11yz + z^2"),
      parse_polynomial(field, "2x^2 + 8xy + 11y^2 - 4xz - 8yz + z^2"),
      parse_polynomial(field, "3x + 8y + z")};
  for (auto _ : state) benchmark::DoNotOptimize(has_projective_common_zero(field, system));
}
BENCHMARK(BM_ProjectiveCommonZero);

}  // namespace

BENCHMARK_MAIN();
