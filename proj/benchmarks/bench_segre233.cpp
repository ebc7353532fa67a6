#include <benchmark/benchmark.h>

#include <segre233/oracle.hpp>

#include <random>
#include <vector>

namespace {

using namespace segre233;

std::vector<Tensor233> tensor_pool(const Gf& f, std::size_t n) {
  std::mt19937_64 rng(7);
  std::vector<Tensor233> pool(n);
  for (auto& t : pool) t = random_tensor(f, rng);
  return pool;
}

void BM_ClassifyFast(benchmark::State& state) {
  Gf f = Gf::from_order(static_cast<int>(state.range(0)));
  auto pool = tensor_pool(f, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(f, pool[i++ & 1023], false).h);
  }
}
BENCHMARK(BM_ClassifyFast)->Arg(2)->Arg(3)->Arg(4)->Arg(9);

void BM_ClassifyFull(benchmark::State& state) {
  Gf f = Gf::from_order(static_cast<int>(state.range(0)));
  auto pool = tensor_pool(f, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(f, pool[i++ & 1023], true).h);
  }
}
BENCHMARK(BM_ClassifyFull)->Arg(2)->Arg(3);

void BM_RankDistribution(benchmark::State& state) {
  Gf f = Gf::from_order(static_cast<int>(state.range(0)));
  auto pool = tensor_pool(f, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_distribution(f, pool[i++ & 1023]).r2);
  }
}
BENCHMARK(BM_RankDistribution)->Arg(2)->Arg(9);

void BM_DetFormFactorType(benchmark::State& state) {
  Gf f = Gf::from_order(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(7);
  std::vector<std::pair<Mat, Mat>> pool(256);
  for (auto& [m1, m2] : pool) {
    m1 = random_matrix(f, 3, 3, rng);
    m2 = random_matrix(f, 3, 3, rng);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [m1, m2] = pool[i++ & 255];
    benchmark::DoNotOptimize(factor_type(f, det_form(f, m1, m2)));
  }
}
BENCHMARK(BM_DetFormFactorType)->Arg(2)->Arg(5);

void BM_GroupAction(benchmark::State& state) {
  Gf f = Gf::from_order(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(7);
  auto pool = tensor_pool(f, 256);
  std::vector<GroupElementH> gs(64);
  for (auto& g : gs) g = random_h_element(f, rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(act(f, pool[i & 255], gs[i & 63]).a[0]);
    ++i;
  }
}
BENCHMARK(BM_GroupAction)->Arg(2)->Arg(4);

void BM_OrbitBfsMediumOrbit(benchmark::State& state) {
  Gf f = Gf::from_order(2);
  Tensor233 seed = canonical_form(f, OrbitLabel::o6);  // orbit size 2646
  auto gens = h_generators(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_bfs(f, seed, gens).size);
  }
}
BENCHMARK(BM_OrbitBfsMediumOrbit)->Unit(benchmark::kMillisecond);

void BM_FullCensusQ2(benchmark::State& state) {
  Gf f = Gf::from_order(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_census(f, 1).total);
  }
}
BENCHMARK(BM_FullCensusQ2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
