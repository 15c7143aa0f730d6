#include <benchmark/benchmark.h>

#include "heis/instances.hpp"

namespace {

using namespace heis;

void BM_rref(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(7);
  QMat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = rng.small_rat();
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_char_poly(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(7);
  QMat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = rng.small_rat();
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_char_poly)->Arg(4)->Arg(8)->Arg(12);

void BM_generate_algebra(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HeisenbergProjAction h = build_example(n, n);
  std::vector<QMat> gens = h.rep.X;
  gens.push_back(h.rep.t_mat);
  for (auto _ : state) benchmark::DoNotOptimize(generate_algebra(gens, h.rep.d).dim());
}
BENCHMARK(BM_generate_algebra)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_descend(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HeisenbergProjAction h = build_example(n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(descend_action(h).tautological);
}
BENCHMARK(BM_descend)->Arg(1)->Arg(2)->Arg(3);

void BM_certify_pair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto family = generate_family(n, {Rat(1), Rat(2)});
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_inequivalent(family[0], family[1]).inequivalent);
}
BENCHMARK(BM_certify_pair)->Arg(1)->Arg(2)->Arg(3);

void BM_random_tautological(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(random_tautological_instance(n, rng).loc.algebra.dim());
  }
}
BENCHMARK(BM_random_tautological)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
