#include <benchmark/benchmark.h>

#include "thetapairs/curve.hpp"
#include "thetapairs/factor.hpp"
#include "thetapairs/generator.hpp"
#include "thetapairs/group.hpp"
#include "thetapairs/maps.hpp"

namespace tp = thetapairs;

namespace {

const tp::CurveConfig& worked() {
  static const tp::CurveConfig cfg = tp::make_config(1, 2, tp::make_angle(1, 2));
  return cfg;
}

const tp::ECPoint& p3() {
  static const tp::ECPoint p = tp::nine_points(worked())[2].ec;
  return p;
}

void BM_ScalarMul(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(tp::scalar_mul(worked(), n, p3()));
}
BENCHMARK(BM_ScalarMul)->RangeMultiplier(2)->Range(4, 64);

void BM_FromJacobian(benchmark::State& state) {
  const tp::ECPoint q = tp::scalar_mul(worked(), state.range(0), p3());
  for (auto _ : state) benchmark::DoNotOptimize(tp::from_jacobian(worked(), q));
}
BENCHMARK(BM_FromJacobian)->Arg(2)->Arg(8)->Arg(32);

void BM_FactorizeSemiprime(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(0));
  tp::BigInt p, q;
  const tp::BigInt base = tp::BigInt(1) << (bits / 2);
  mpz_nextprime(p.get_mpz_t(), base.get_mpz_t());
  mpz_nextprime(q.get_mpz_t(), p.get_mpz_t());
  const tp::BigInt n = p * q;
  for (auto _ : state) benchmark::DoNotOptimize(tp::factorize(n));
}
BENCHMARK(BM_FactorizeSemiprime)->Arg(40)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_FindSeed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tp::find_seed(worked()));
}
BENCHMARK(BM_FindSeed)->Unit(benchmark::kMillisecond);

void BM_GeneratePairs(benchmark::State& state) {
  const tp::CurveConfig cfg = tp::make_config(2, 3, tp::make_angle(3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(tp::generate_pairs(cfg, state.range(0), 60));
}
BENCHMARK(BM_GeneratePairs)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
