#include <benchmark/benchmark.h>

#include "feqlab/corrected_identities.hpp"
#include "feqlab/frobenius_euler.hpp"
#include "feqlab/int_polynomial.hpp"
#include "feqlab/padic.hpp"

namespace {

using namespace feqlab;

// Denominators of the dual numbers make a realistic gcd workload.
void BM_GcdHeuristic(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const IntPolynomial a = fe_dual_number(n, 3).numerator() * IntPolynomial{1, 1};
  const IntPolynomial b = fe_dual_number(n, 3).denominator();
  for (auto _ : state) benchmark::DoNotOptimize(gcd_with_cofactors(a, b));
}
BENCHMARK(BM_GcdHeuristic)->Arg(4)->Arg(8)->Arg(12);

void BM_GcdPrs(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const IntPolynomial a = fe_dual_number(n, 3).numerator() * IntPolynomial{1, 1};
  const IntPolynomial b = fe_dual_number(n, 3).denominator();
  for (auto _ : state) benchmark::DoNotOptimize(primitive_prs_gcd(a, b));
}
BENCHMARK(BM_GcdPrs)->Arg(4)->Arg(8)->Arg(12);

void BM_DualTable(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(FeDualTable(n, 5));
}
BENCHMARK(BM_DualTable)->Arg(6)->Arg(12)->Arg(18);

void BM_CorrectedSymmetry(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(corrected_symmetry(n, 5, 7));
}
BENCHMARK(BM_CorrectedSymmetry)->Arg(2)->Arg(4)->Arg(8);

void BM_RiemannSum(benchmark::State& state) {
  const PAdicContext ctx(3, 6);
  const unsigned level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fermionic_riemann_sum(6, BigRational(4), level, ctx));
  long terms = 1;
  for (unsigned i = 0; i < level; ++i) terms *= 3;
  state.SetItemsProcessed(state.iterations() * terms);
}
BENCHMARK(BM_RiemannSum)->DenseRange(2, 8, 2);

}  // namespace
BENCHMARK_MAIN();
