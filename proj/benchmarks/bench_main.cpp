#include <benchmark/benchmark.h>

#include <random>

#include "subdivlab/construct.hpp"
#include "subdivlab/distances.hpp"
#include "subdivlab/patterns.hpp"
#include "subdivlab/regularize.hpp"

using namespace subdivlab;

namespace {

Bigraph random_host(std::size_t left, std::size_t right, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = 0; v < right; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Bigraph(left, right, edges);
}

void BM_FindEmbedding(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Bigraph host = random_host(n, 2 * n, 0.15, 1);
  const SubdividedPattern pattern({2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(find_embedding(host, pattern));
}
BENCHMARK(BM_FindEmbedding)->Arg(16)->Arg(32)->Arg(64);

void BM_CountEmbeddings(benchmark::State& state) {
  const Bigraph host = random_host(8, 12, 0.4, 2);
  const SubdividedPattern pattern({1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(count_embeddings(host, pattern));
}
BENCHMARK(BM_CountEmbeddings);

void BM_Reduce(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Bigraph g = Bigraph::complete(m, m * m);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g, 2, Rational(1)));
}
BENCHMARK(BM_Reduce)->Arg(16)->Arg(32);

void BM_Construction(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_lower_bound_graph(m, m, 2, 3, Rational(1), seed++));
}
BENCHMARK(BM_Construction)->Arg(32)->Arg(64);

PointSet grid(long side) {
  PointSet g;
  for (long x = 0; x < side; ++x)
    for (long y = 0; y < side; ++y) g.push_back({Rational(x), Rational(y)});
  return g;
}

void BM_Energy(benchmark::State& state) {
  const auto pts = grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(energy(pts));
}
BENCHMARK(BM_Energy)->Arg(6)->Arg(10);

void BM_Lift(benchmark::State& state) {
  const auto pts = grid(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lift(pts, seed++));
}
BENCHMARK(BM_Lift)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
