// Serial reference loops against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "quatsurf/kernels.hpp"
#include "quatsurf/qmat.hpp"
#include "support/generators.hpp"
#include "support/torus.hpp"

namespace {

using namespace quatsurf;
namespace t = quatsurf::testing;

SurfaceSpec c_surface() {
  t::Rng rng(11);
  return {CPayload{t::circle_s3(rng, 9), t::circle_s3(rng, 9)}};
}

std::vector<Mat2> kron_batch(int count) {
  t::Rng rng(12);
  std::vector<Mat2> out;
  for (int n = 0; n < count; ++n)
    out.push_back(kron({t::qpoly_uv(rng, 2, 0, 20, 0.7), t::qpoly_uv(rng, 2, 0, 20, 0.7)},
                       {t::qpoly_uv(rng, 2, 1, 20, 0.6), t::qpoly_uv(rng, 2, 1, 20, 0.6)}));
  return out;
}

template <SurfaceGrid (*Sample)(const SurfaceSpec&, int)>
void grid(benchmark::State& state, const SurfaceSpec& spec) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Sample(spec, n));
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_GridC_Serial(benchmark::State& s) { grid<sample_grid_serial>(s, c_surface()); }
void BM_GridC_OpenMP(benchmark::State& s) { grid<sample_grid>(s, c_surface()); }

void BM_GridD_Serial(benchmark::State& s) {
  grid<sample_grid_serial>(s, {DPayload(t::torus_quadric(), t::torus_parametrization())});
}
void BM_GridD_OpenMP(benchmark::State& s) { grid<sample_grid>(s, {DPayload(t::torus_quadric(), t::torus_parametrization())}); }

template <std::vector<SplitOutcome> (*Split)(std::span<const Mat2>)>
void splits(benchmark::State& state) {
  const auto batch = kron_batch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Split(batch));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(batch.size()));
}

void BM_Split_Serial(benchmark::State& s) { splits<split_batch_serial>(s); }
void BM_Split_OpenMP(benchmark::State& s) { splits<split_batch>(s); }

template <std::vector<bool> (*Degenerate)(std::span<const Mat2>)>
void degeneracy(benchmark::State& state) {
  const auto batch = kron_batch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Degenerate(batch));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(batch.size()));
}

void BM_Degenerate_Serial(benchmark::State& s) { degeneracy<degenerate_batch_serial>(s); }
void BM_Degenerate_OpenMP(benchmark::State& s) { degeneracy<degenerate_batch>(s); }

}  // namespace

BENCHMARK(BM_GridC_Serial)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridC_OpenMP)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridD_Serial)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridD_OpenMP)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Split_Serial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Split_OpenMP)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Degenerate_Serial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Degenerate_OpenMP)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
