#include <benchmark/benchmark.h>

#include "relspin/coefficients.hpp"
#include "relspin/hamiltonian.hpp"
#include "relspin/symmetry.hpp"

namespace {

using namespace relspin;

const Convention conv;

void BM_residual(benchmark::State& state) {
  Jet jet;
  jet.v = {0.4, -0.3};
  jet.vp = {0.2, 0.6};
  jet.vpp = {-0.1, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(residual_ep(jet, 1.0, conv));
}
BENCHMARK(BM_residual);

void BM_solve_jerk(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_jerk({0.4, -0.3}, {0.2, 0.6}, 1.0, conv));
}
BENCHMARK(BM_solve_jerk);

void BM_worldline_step(benchmark::State& state) {
  const double T = state.range(0) * 1e-3;
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_worldline({0, 0}, {0.3, -0.1}, {0.15, 0.2},
                                                 1.0, 0.0, T, 1e-3, Method::rk4,
                                                 conv));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_worldline_step)->Arg(100)->Arg(1000);

void BM_inverse_legendre(benchmark::State& state) {
  const Momenta m = momenta({0.5, 0.3}, {0.4, -0.2}, 1.0, conv);
  for (auto _ : state)
    benchmark::DoNotOptimize(inverse_legendre(m.p, m.pp, 1.0, conv));
}
BENCHMARK(BM_inverse_legendre);

void BM_canonical_flow(benchmark::State& state) {
  const CanonicalState s0 =
      legendre_transform(0.0, {0, 0}, {0.3, -0.1}, {0.15, 0.2}, 1.0, conv);
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_flow(s0, 1.0, 0.0, 0.1, 1e-3, conv));
}
BENCHMARK(BM_canonical_flow);

void BM_helmholtz_point(benchmark::State& state) {
  const CoefficientField cf = motion_coefficients(1.0, conv);
  const SamplePoint at{0.2, {0.1, -0.3}, {0.4, 0.2}};
  for (auto _ : state) benchmark::DoNotOptimize(helmholtz_residuals(cf, at, conv));
}
BENCHMARK(BM_helmholtz_point);

void BM_invariance_point(benchmark::State& state) {
  const CoefficientField cf = motion_coefficients(1.0, conv);
  const PoincareGen gen{0.7, {0.5, -0.8}, {}};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        invariance_residuals(cf, {0.5, 0.2}, {0.7, -0.3}, gen, conv));
}
BENCHMARK(BM_invariance_point);

}  // namespace

BENCHMARK_MAIN();
