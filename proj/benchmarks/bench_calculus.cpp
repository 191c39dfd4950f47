#include "nccalc/context.hpp"
#include "nccalc/ncmaxwell.hpp"
#include "nccalc/parser.hpp"
#include "nccalc/thetamat.hpp"

#include <benchmark/benchmark.h>

using namespace nccalc;

namespace {

AElem sample(int degree) {
  const AElem lin[] = {AElem::gen(Gen::x) + AElem::gen(Gen::y), AElem::gen(Gen::z) - AElem(2),
                       AElem::gen(Gen::y) + AElem::gen(Gen::t), AElem::gen(Gen::x) - AElem::gen(Gen::z)};
  AElem a(1);
  for (int k = 0; k < degree; ++k) a = a * lin[k % 4];
  return a;
}

// Caches live in the context; a fresh scope per iteration measures cold cost.
void BM_PbwNormalizeCold(benchmark::State& state) {
  std::vector<Gen> word;
  for (int k = 0; k < state.range(0); ++k) word.push_back(static_cast<Gen>(3 - k % 3));
  for (auto _ : state) {
    HbarScope scope(std::nullopt);
    benchmark::DoNotOptimize(pbw_normalize(word));
  }
}
BENCHMARK(BM_PbwNormalizeCold)->DenseRange(2, 8, 2);

void BM_AMul(benchmark::State& state) {
  const AElem a = sample(static_cast<int>(state.range(0))), b = sample(3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_AMul)->DenseRange(1, 4);

void BM_DerivSigma(benchmark::State& state) {
  const AElem a = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deriv(DGen::x, a));
}
BENCHMARK(BM_DerivSigma)->DenseRange(1, 4);

void BM_DerivCoproduct(benchmark::State& state) {
  const AElem a = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deriv_all_coprod(a));
}
BENCHMARK(BM_DerivCoproduct)->DenseRange(1, 4);

void BM_ThetaHat(benchmark::State& state) {
  const AElem a = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theta_hat(a));
}
BENCHMARK(BM_ThetaHat)->DenseRange(1, 4);

void BM_ThetaRhoPower(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta_hat_rho_power(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ThetaRhoPower)->Arg(-3)->Arg(1)->Arg(3);

void BM_MonopoleCheck(benchmark::State& state) {
  for (auto _ : state) {
    const VecField f = monopole(g_sym());
    benchmark::DoNotOptimize(div(f));
    benchmark::DoNotOptimize(rot(f));
  }
}
BENCHMARK(BM_MonopoleCheck);

void BM_ParseEval(benchmark::State& state) {
  const std::string src = "(x + 2*y)*(z - t)*inv(rho^2 + 1)*y";
  for (auto _ : state) benchmark::DoNotOptimize(eval_skew(parse(src)));
}
BENCHMARK(BM_ParseEval);

}  // namespace

BENCHMARK_MAIN();
