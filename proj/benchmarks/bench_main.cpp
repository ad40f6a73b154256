#include <benchmark/benchmark.h>

#include "nodal_theta/errors.hpp"
#include "nodal_theta/inversion_branches.hpp"
#include "nodal_theta/rng.hpp"
#include "nodal_theta/theta.hpp"

using namespace nodal_theta;

namespace {

constexpr double kQuad = 1e-10;

NodalCurveSpec square_curve() {
  NodalCurveSpec::Params p;
  p.tau = {0.0, 1.0};
  p.p1 = {0.55, 0.62};
  p.p2 = {0.24, 0.45};
  p.z0 = {0.8, 0.15};
  p.delta = 0.05;
  p.eps = 0.05;
  return NodalCurveSpec::create(p);
}

CPair generic_shift(const AbelJacobi& aj) {
  SplitMix64 rng(2024);
  for (;;) {
    const CPair c = sample_shift(rng, aj.spec().tau().value());
    try {
      const LaurentData ld{ThetaPullback(aj, c)};
      if (ld.zeros_in_disk(1.25 * aj.spec().eps()) == 0) return c;
    } catch (const ResampleRequired&) {
    }
  }
}

void BM_ThetaChar(benchmark::State& state) {
  const ModularParameter tau(Complex(0.3, 0.8));
  const SeriesPolicy policy{};
  const Characteristic ch{-0.2, 0.35};
  Complex z(0.37, 0.21);
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_char(ch, z, tau, policy));
  }
}
BENCHMARK(BM_ThetaChar);

void BM_PullbackValue(benchmark::State& state) {
  const AbelJacobi aj(square_curve());
  const ThetaPullback tp(aj, generic_shift(aj));
  const Complex P = aj.spec().point(0.3, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(tp.value(P));
}
BENCHMARK(BM_PullbackValue);

void BM_LocateZeros(benchmark::State& state) {
  const AbelJacobi aj(square_curve());
  const ThetaPullback tp(aj, generic_shift(aj));
  for (auto _ : state) benchmark::DoNotOptimize(locate_zeros(tp, kQuad));
}
BENCHMARK(BM_LocateZeros)->Unit(benchmark::kMillisecond);

void BM_H3(benchmark::State& state) {
  const AbelJacobi aj(square_curve());
  const LaurentData ld{ThetaPullback(aj, generic_shift(aj))};
  for (auto _ : state) benchmark::DoNotOptimize(ld.H3(aj.spec().eps(), kQuad));
}
BENCHMARK(BM_H3)->Unit(benchmark::kMicrosecond);

void BM_BranchInverseSolve(benchmark::State& state) {
  const AbelJacobi aj(square_curve());
  const RiemannConstants kappa = riemann_constants(aj, KappaVariant::half_tau, kQuad);
  const BranchInverse inverse(aj, kappa, kQuad);
  const CPair u = inverse.forward(generic_shift(aj));
  for (auto _ : state) benchmark::DoNotOptimize(inverse.solve(u, 0));
}
BENCHMARK(BM_BranchInverseSolve)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
