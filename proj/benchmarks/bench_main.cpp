#include <random>

#include <benchmark/benchmark.h>

#include "tpca/ibtsvt.hpp"
#include "tpca/synth.hpp"
#include "tpca/tproduct.hpp"
#include "tpca/tsvd.hpp"

namespace {

using namespace tpca;

Tensor3 gaussian(std::size_t n1, std::size_t n2, std::size_t n3, std::uint64_t seed) {
  synth::Rng rng(seed);
  Tensor3 t(Shape3{n1, n2, n3});
  for (auto& v : t.data()) v = rng.normal();
  return t;
}

void BM_TProductFourier(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto n3 = static_cast<std::size_t>(state.range(1));
  const Tensor3 a = gaussian(n, n, n3, 1), b = gaussian(n, n, n3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tproduct(a, b));
}
BENCHMARK(BM_TProductFourier)->Args({8, 16})->Args({32, 20})->Args({16, 64})->Args({64, 64});

void BM_TProductNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto n3 = static_cast<std::size_t>(state.range(1));
  const Tensor3 a = gaussian(n, n, n3, 1), b = gaussian(n, n, n3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tproduct_naive(a, b));
}
BENCHMARK(BM_TProductNaive)->Args({8, 16})->Args({32, 20})->Args({16, 64});

void BM_Tsvd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Tensor3 a = gaussian(n, n, 20, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tsvd(a));
}
BENCHMARK(BM_Tsvd)->Arg(2)->Arg(8)->Arg(32);

void BM_SvtBlock(benchmark::State& state) {
  const auto n3 = static_cast<std::size_t>(state.range(0));
  const Tensor3 a = gaussian(2, 2, n3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(svt(a, 0.5));
}
BENCHMARK(BM_SvtBlock)->Arg(20)->Arg(64);

// Frame-sized input (144 x 176, 20 frames) with 2 x 2 blocks.
void BM_IbtsvtVideo(benchmark::State& state) {
  synth::VideoSpec spec;
  spec.rows = 144;
  spec.cols = 176;
  spec.frames = 20;
  spec.square = 16;
  const auto sample = synth::video(spec);
  IbtsvtConfig cfg;
  cfg.threads = static_cast<std::size_t>(state.range(0));
  int iterations = 0;
  for (auto _ : state) {
    const auto res = ibtsvt(sample.x, cfg);
    iterations = res.iterations;
    benchmark::DoNotOptimize(res.l);
  }
  state.counters["iterations"] = iterations;
}
BENCHMARK(BM_IbtsvtVideo)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
