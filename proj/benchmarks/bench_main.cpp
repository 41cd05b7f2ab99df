#include <benchmark/benchmark.h>

#include <random>

#include "conemm/checks.hpp"
#include "conemm/extremal.hpp"
#include "conemm/fixture_library.hpp"
#include "conemm/minimax.hpp"

namespace conemm {
namespace {

PointCloud random_cloud(int dim, int size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  PointCloud out(dim);
  Vec p(dim);
  for (int i = 0; i < size; ++i) {
    for (auto& c : p) c = coord(rng);
    out.push_back(p);
  }
  return out;
}

void BM_ExtremalPoints(benchmark::State& state) {
  const Cone cone = parse_cone_spec("R2plus");
  const PointCloud a = random_cloud(2, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(extremal_points(a, cone, ExtremalMode::min_w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExtremalPoints)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ExtremalFacts(benchmark::State& state) {
  const Cone cone = parse_cone_spec("R3plus");
  const PointCloud a = random_cloud(3, 200, 11);
  for (auto _ : state) benchmark::DoNotOptimize(check_extremal_facts(a, cone));
}
BENCHMARK(BM_ExtremalFacts);

ToleranceConfig at_resolution(int res) {
  ToleranceConfig cfg;
  cfg.grid_resolution = res;
  return cfg;
}

void BM_CheckProperty(benchmark::State& state, const char* fixture, const char* property) {
  const ToleranceConfig cfg = at_resolution(static_cast<int>(state.range(0)));
  const auto fx = make_fixture(fixture, cfg.fixture_params());
  const Cone cone = parse_cone_spec(fixture_info(fixture).default_cone);
  CheckOptions opt;
  opt.cfg = cfg;
  const PropertySpec spec = PropertySpec::parse(property);
  for (auto _ : state) benchmark::DoNotOptimize(check_property(fx, cone, spec, opt));
}
BENCHMARK_CAPTURE(BM_CheckProperty, pair_properly_v, "ex3_2", "pair_properly_v[first,convex]")
    ->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckProperty, transfer_mu_v, "ex3_1", "transfer_mu_v[first,convex]")
    ->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_VerifyMinimax(benchmark::State& state) {
  const ToleranceConfig cfg = at_resolution(static_cast<int>(state.range(0)));
  const auto fx = make_fixture("ex4_1", cfg.fixture_params());
  const Cone cone = parse_cone_spec(fixture_info("ex4_1").default_cone);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_minimax(fx, cone, Conclusion::pair_i, cfg));
}
BENCHMARK(BM_VerifyMinimax)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace conemm

BENCHMARK_MAIN();
