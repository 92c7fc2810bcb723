#include <benchmark/benchmark.h>

#include <memory>

#include "tqr/char_table.hpp"
#include "tqr/class_functions.hpp"
#include "tqr/group.hpp"
#include "tqr/markov.hpp"

namespace {

std::shared_ptr<const tqr::CharTable> table_for(std::size_t p) {
  return std::make_shared<const tqr::CharTable>(tqr::CharTable::compute(tqr::make_affine(p)));
}

void BM_ConjugacyClassesSymmetric(benchmark::State& state) {
  const auto g = tqr::make_symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tqr::conjugacy_classes(g));
}
BENCHMARK(BM_ConjugacyClassesSymmetric)->Arg(4)->Arg(5);

void BM_CharTableAffine(benchmark::State& state) {
  const auto g = std::make_shared<const tqr::GroupTable>(tqr::make_affine(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(tqr::CharTable::compute(g));
}
BENCHMARK(BM_CharTableAffine)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

void BM_CharTableAlternating5(benchmark::State& state) {
  const auto g = std::make_shared<const tqr::GroupTable>(tqr::make_alternating(5));
  for (auto _ : state) benchmark::DoNotOptimize(tqr::CharTable::compute(g));
}
BENCHMARK(BM_CharTableAlternating5);

void BM_TensorProductAll(benchmark::State& state) {
  const auto t = table_for(static_cast<std::size_t>(state.range(0)));
  const auto all = tqr::all_irreps(*t);
  for (auto _ : state) benchmark::DoNotOptimize(tqr::tensor_product(*t, all, all));
}
BENCHMARK(BM_TensorProductAll)->Arg(7)->Arg(13);

void BM_TensorPowerSupport(benchmark::State& state) {
  const auto t = table_for(13);
  const auto top = tqr::single_irrep(*t, t->num_irreps() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(tqr::tensor_power_support(*t, top, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TensorPowerSupport)->Arg(2)->Arg(3)->Arg(6);

void BM_BuildChain(benchmark::State& state) {
  const auto t = table_for(static_cast<std::size_t>(state.range(0)));
  const auto top = tqr::single_irrep(*t, t->num_irreps() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(tqr::build_chain(*t, top));
}
BENCHMARK(BM_BuildChain)->Arg(7)->Arg(13);

void BM_TStepDistribution(benchmark::State& state) {
  const auto t = table_for(13);
  const auto chain = tqr::build_chain(*t, tqr::single_irrep(*t, t->num_irreps() - 1));
  for (auto _ : state) benchmark::DoNotOptimize(tqr::t_step_distribution(chain, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TStepDistribution)->Arg(4)->Arg(64);

}  // namespace
BENCHMARK_MAIN();
