#include <benchmark/benchmark.h>

#include "talbot/chambers.hpp"
#include "talbot/chartab.hpp"
#include "talbot/hermrep.hpp"
#include "talbot/sylowforms.hpp"

namespace {

using namespace talbot;

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(n));
}
BENCHMARK(BM_CharacterTable)->DenseRange(5, 10);

void BM_IsotypicProjector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = character_table(n);
  auto space = std::make_shared<const FormSpace>(static_cast<std::size_t>(n));
  const Partition lambda = table.irreps()[1];
  for (auto _ : state) benchmark::DoNotOptimize(isotypic_projector(lambda, table, space).matrix());
}
BENCHMARK(BM_IsotypicProjector)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_VerifyLemma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma(n).passed);
}
BENCHMARK(BM_VerifyLemma)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<PointV> points;
  for (std::uint64_t k = 0; k < 256; ++k) points.push_back(sample_point(n, derive_seed(1, k)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(points[i++ & 255]).interior);
}
BENCHMARK(BM_Classify)->Arg(5)->Arg(7)->Arg(12);

void BM_VerifyPartition(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_partition(5, 10000, 7).boundary_hits);
}
BENCHMARK(BM_VerifyPartition)->Unit(benchmark::kMillisecond);

void BM_SylowBasis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_sylow_basis(0).forms.size());
}
BENCHMARK(BM_SylowBasis)->Unit(benchmark::kMillisecond);

void BM_ClassifyRegion(benchmark::State& state) {
  const auto basis = build_sylow_basis(0);
  std::vector<PointV> points;
  for (std::uint64_t k = 0; k < 256; ++k) points.push_back(sample_point(5, derive_seed(2, k)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_region(points[i++ & 255], basis).interior);
}
BENCHMARK(BM_ClassifyRegion);

}  // namespace

BENCHMARK_MAIN();
