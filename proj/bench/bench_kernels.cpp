// Serial reference kernels against their OpenMP counterparts.

#include "liedec/closure.hpp"
#include "liedec/kernels.hpp"
#include "liedec/levi.hpp"
#include "liedec/cartan.hpp"
#include "liedec/primary.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <random>

using namespace liedec;
using kernels::Exec;

namespace {

SkewHermitian random_traceless(std::mt19937_64& rng, Index n) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  CMatrix a = 0.5 * (m - m.adjoint());
  a -= (a.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
  return SkewHermitian(CMatrix(a / a.norm()));
}

std::vector<SkewHermitian> generators(Index n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  return {random_traceless(rng, n), random_traceless(rng, n)};
}

// su(n), cached per size
const LieBasis& su(Index n) {
  static std::map<Index, LieBasis> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate_closure(generators(n)).basis).first;
  return it->second;
}

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void BM_BracketsUpper(benchmark::State& state) {
  const auto& elems = su(state.range(0)).elements();
  const Exec e = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::brackets_upper(elems, e));
}

void BM_StructureMatrices(benchmark::State& state) {
  const LieBasis& b = su(state.range(0));
  const Exec e = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::structure_matrices(b, e));
}

void BM_Closure(benchmark::State& state) {
  const auto gens = generators(state.range(0));
  const Exec e = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(generate_closure(gens, {}, e));
}

void BM_SplittingSearch(benchmark::State& state) {
  const LieBasis& s = su(state.range(0));
  static std::map<Index, LieBasis> cartans;
  auto it = cartans.find(state.range(0));
  if (it == cartans.end()) it = cartans.emplace(state.range(0), cartan_subalgebra(s).cartan).first;
  const Exec e = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(find_splitting_element(s, it->second, {}, e));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (long n : {3, 4, 6}) {
    for (long par : {0, 1}) b->Args({n, par});
  }
  b->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_BracketsUpper)->Apply(sizes);
BENCHMARK(BM_StructureMatrices)->Apply(sizes);
BENCHMARK(BM_Closure)->Apply(sizes);
BENCHMARK(BM_SplittingSearch)->Apply(sizes);

BENCHMARK_MAIN();
