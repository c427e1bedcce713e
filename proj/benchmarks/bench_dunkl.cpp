#include <benchmark/benchmark.h>

#include "dunkl/hermite.hpp"
#include "dunkl/intertwiner.hpp"
#include "dunkl/ops.hpp"
#include "dunkl/quadrature.hpp"

using namespace dunkl;

namespace {

const MuParam kMu(Rational(19, 4));

void BM_Hermite(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite(n));
  }
}
BENCHMARK(BM_Hermite)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_GeneralizedHermite(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generalized_hermite(kMu, n));
  }
}
BENCHMARK(BM_GeneralizedHermite)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ToHermiteRoundTrip(benchmark::State& state) {
  const Poly p = hermite(static_cast<unsigned>(state.range(0))) +
                 Poly::monomial(static_cast<unsigned>(state.range(0)) / 2, Rational(3, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_poly(to_hermite(p)));
  }
}
BENCHMARK(BM_ToHermiteRoundTrip)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_VmuMonomial(benchmark::State& state) {
  const Poly p = hermite(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(v_mu_monomial(kMu, p));
  }
}
BENCHMARK(BM_VmuMonomial)->Arg(16)->Arg(32)->Arg(64);

void BM_VmuHermite(benchmark::State& state) {
  const Poly p = hermite(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(v_mu_hermite(kMu, p));
  }
}
BENCHMARK(BM_VmuHermite)->Arg(16)->Arg(32)->Arg(64);

void BM_VmuBoson(benchmark::State& state) {
  const Poly p = hermite(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(v_mu_boson(kMu, p));
  }
}
BENCHMARK(BM_VmuBoson)->Arg(16)->Arg(32)->Arg(64);

void BM_BuildRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_rule(0.25, n));
  }
}
BENCHMARK(BM_BuildRule)->Arg(8)->Arg(32)->Arg(128);

void BM_VmuIntegral(benchmark::State& state) {
  const QuadRule rule = build_rule(1.5, static_cast<int>(state.range(0)));
  const Poly p = hermite(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(v_mu_integral(rule, p, 0.7));
  }
}
BENCHMARK(BM_VmuIntegral)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
