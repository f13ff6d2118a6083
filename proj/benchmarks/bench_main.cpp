#include <benchmark/benchmark.h>

#include "tropical/generators.hpp"
#include "tropical/verify.hpp"

namespace {

using namespace tropical;

std::vector<HemispaceSpec> specs(std::size_t n) {
  Rng rng = make_rng(7);
  std::vector<HemispaceSpec> out;
  for (int k = 0; k < 32; ++k) out.push_back(random_valid_spec(rng, Model::MaxTimes, n));
  return out;
}

void BM_ConicalMember(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto all = specs(n);
  Rng rng = make_rng(8);
  std::vector<Vec> points;
  for (int k = 0; k < 256; ++k) points.push_back(random_vec(rng, default_grid_values(Model::MaxTimes), n));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(conical_member(all[k % all.size()], points[k % points.size()]));
    ++k;
  }
}
BENCHMARK(BM_ConicalMember)->Arg(3)->Arg(6)->Arg(12);

void BM_RankOneCheck(benchmark::State& state) {
  const auto all = specs(state.range(0));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rank_one_check(all[k++ % all.size()].raw()));
}
BENCHMARK(BM_RankOneCheck)->Arg(4)->Arg(8)->Arg(12);

void BM_ThinStructure(benchmark::State& state) {
  const auto all = specs(state.range(0));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(thin_structure(all[k++ % all.size()].raw()));
}
BENCHMARK(BM_ThinStructure)->Arg(4)->Arg(8)->Arg(12);

void BM_PartitionCheck(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto all = specs(n);
  const GridSpec grid(Model::MaxTimes, n, default_grid_values(Model::MaxTimes));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(partition_check(all[k++ % all.size()], grid).passed);
}
BENCHMARK(BM_PartitionCheck)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
