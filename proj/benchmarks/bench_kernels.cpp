// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot kernels: the exhaustive and greedy subset
// scans, per-trial rate evaluation, and the Grassmann primitives that
// dominate covering-radius estimation. Run a subset with
// --benchmark_filter=<regex>.

#include <benchmark/benchmark.h>

#include <vector>

#include "ojs/channel.hpp"
#include "ojs/grassmann.hpp"
#include "ojs/rates.hpp"
#include "ojs/rng.hpp"
#include "ojs/selection.hpp"

namespace {

ojs::SystemConfig pool_config(int s) {
  ojs::SystemConfig cfg;
  cfg.nt = 2;
  cfg.nj = 2;
  cfg.nr = 4;
  cfg.ne = 4;
  cfg.k = 2;
  cfg.s = s;
  return ojs::validate(cfg);
}

void BM_SelectOjs1(benchmark::State& state) {
  const ojs::SystemConfig cfg = pool_config(static_cast<int>(state.range(0)));
  const ojs::ChannelRealization ch = ojs::sample_realization(cfg, {7, 0});
  for (auto _ : state) benchmark::DoNotOptimize(ojs::select_ojs1(ch, cfg, 100.0));
}
BENCHMARK(BM_SelectOjs1)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMicrosecond);

void BM_SelectOjs1Greedy(benchmark::State& state) {
  const ojs::SystemConfig cfg = pool_config(static_cast<int>(state.range(0)));
  const ojs::ChannelRealization ch = ojs::sample_realization(cfg, {7, 0});
  const ojs::SelectionOptions opts{.greedy = true};
  for (auto _ : state)
    benchmark::DoNotOptimize(ojs::select_ojs1(ch, cfg, 100.0, opts));
}
BENCHMARK(BM_SelectOjs1Greedy)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMicrosecond);

void BM_SelectSecrecyMax(benchmark::State& state) {
  const ojs::SystemConfig cfg = pool_config(static_cast<int>(state.range(0)));
  const ojs::ChannelRealization ch = ojs::sample_realization(cfg, {7, 0});
  for (auto _ : state)
    benchmark::DoNotOptimize(ojs::select_secrecy_max(ch, cfg, 100.0));
}
BENCHMARK(BM_SelectSecrecyMax)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMicrosecond);

void BM_EvaluateRates(benchmark::State& state) {
  const ojs::SystemConfig cfg = pool_config(8);
  const ojs::ChannelRealization ch = ojs::sample_realization(cfg, {7, 0});
  const ojs::SelectionResult sel = ojs::select_ojs1(ch, cfg, 100.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(ojs::evaluate_rates(ch, cfg, sel, 100.0));
}
BENCHMARK(BM_EvaluateRates)->Unit(benchmark::kMicrosecond);

void BM_ChordalDistanceSq(benchmark::State& state) {
  ojs::Rng rng(11, 0);
  const ojs::SubspaceBasis a = ojs::random_subspace(4, 2, rng);
  const ojs::SubspaceBasis b = ojs::random_subspace(4, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ojs::chordal_distance_sq(a, b));
}
BENCHMARK(BM_ChordalDistanceSq);

void BM_CoveringRadius(benchmark::State& state) {
  ojs::Rng rng(13, 0);
  std::vector<ojs::SubspaceBasis> codewords;
  for (int j = 0; j < static_cast<int>(state.range(0)); ++j)
    codewords.push_back(ojs::random_subspace(3, 2, rng));
  const ojs::SubspaceCodebook codebook(std::move(codewords));
  for (auto _ : state) {
    ojs::Rng probe(13, 1);
    benchmark::DoNotOptimize(ojs::estimate_covering_radius(codebook, 2, 200, probe));
  }
}
BENCHMARK(BM_CoveringRadius)->RangeMultiplier(4)->Range(2, 128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
