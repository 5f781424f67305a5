#include <benchmark/benchmark.h>

#include "ngit/derivation.hpp"
#include "ngit/groebner.hpp"
#include "ngit/linrep.hpp"
#include "ngit/series.hpp"
#include "ngit/stability.hpp"

using namespace ngit;

namespace {

Polynomial p(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

void BM_PolynomialProduct(benchmark::State& state) {
  auto R = make_ring({"x", "y", "z"});
  Polynomial a = p(R, "3*x^2*y - 2*y*z + z^3 - 7");
  Polynomial b = p(R, "x*z^2 + 5*x*y*z - y^2 + 11*z");
  Polynomial f = a;
  for (int i = 0; i < 4; ++i) f = f * b + a;
  for (auto _ : state) benchmark::DoNotOptimize(f * f);
}
BENCHMARK(BM_PolynomialProduct);

void BM_GroebnerCyclic3(benchmark::State& state) {
  auto R = make_ring({"x", "y", "z"});
  std::vector<Polynomial> gens{p(R, "x + y + z"), p(R, "x*y + y*z + z*x"), p(R, "x*y*z - 1")};
  for (auto _ : state) {
    StepBudget budget(100000);
    benchmark::DoNotOptimize(groebner_basis(Ideal(R, gens), MonomialOrder::grevlex(), &budget));
  }
}
BENCHMARK(BM_GroebnerCyclic3);

void BM_KernelGenerators(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    StepBudget budget;
    benchmark::DoNotOptimize(kernel_generators(weitzenboeck(n), &budget));
  }
}
BENCHMARK(BM_KernelGenerators)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_InvariantPresentation3(benchmark::State& state) {
  for (auto _ : state) {
    StepBudget budget;
    benchmark::DoNotOptimize(invariant_presentation(3, &budget));
  }
}
BENCHMARK(BM_InvariantPresentation3)->Unit(benchmark::kMillisecond);

void BM_SubalgebraMembership(benchmark::State& state) {
  auto R = make_ring({"x0", "x1", "x2", "x3"});
  std::vector<Polynomial> gens = kernel_generators(weitzenboeck(3));
  Polynomial probe = gens[1] * gens[1] * gens[0] - gens[2];
  for (auto _ : state) {
    StepBudget budget;
    benchmark::DoNotOptimize(subalgebra_membership(probe, gens, {}, &budget));
  }
}
BENCHMARK(BM_SubalgebraMembership)->Unit(benchmark::kMillisecond);

void BM_ConfigOracleGrid(benchmark::State& state) {
  PointConfiguration cfg = PointConfiguration::parse("1:0^2,0:1,1:1,2:1^2");
  for (auto _ : state)
    for (unsigned long q = 1; q <= 12; ++q)
      benchmark::DoNotOptimize(config_status_oracle(cfg, {1, q}));
}
BENCHMARK(BM_ConfigOracleGrid);

void BM_EquivariantSeries(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equivariant_series_yss(n));
}
BENCHMARK(BM_EquivariantSeries)->Arg(5)->Arg(11);

void BM_SubstitutionMatrix(benchmark::State& state) {
  auto vars = make_ring({"x", "y", "z"});
  auto params = make_ring({"l", "m", "n"});
  auto C = extend_ring(vars, params->names());
  SubstitutionAutomorphism s(vars, params,
                             {p(C, "x"), p(C, "y"), p(C, "z + l*x^2 + m*x*y + n*y^2")});
  GradedMonomialBasis b = monomial_basis(vars, {1, 1, 2}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(substitution_matrix(s, b));
}
BENCHMARK(BM_SubstitutionMatrix);

void BM_GroupLawCheck(benchmark::State& state) {
  auto vars = make_ring({"x", "y", "z"});
  auto params = make_ring({"l", "m", "n"});
  auto C = extend_ring(vars, params->names());
  SubstitutionAutomorphism s(vars, params,
                             {p(C, "x"), p(C, "y"), p(C, "z + l*x^2 + m*x*y + n*y^2")});
  GradedMonomialBasis b = monomial_basis(vars, {1, 1, 2}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(group_law_check(s, b));
}
BENCHMARK(BM_GroupLawCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
