// Parallel kernels against the serial reference on growing grids and random graphs.
#include <benchmark/benchmark.h>

#include <random>

#include "ctwkit/cycles.hpp"
#include "ctwkit/graph.hpp"
#include "ctwkit/navi.hpp"
#include "ctwkit/reference.hpp"

namespace {

using namespace ctwkit;

Graph grid(int side) {
  std::vector<Edge> e;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if (j + 1 < side) e.push_back({i * side + j, i * side + j + 1});
      if (i + 1 < side) e.push_back({i * side + j, (i + 1) * side + j});
    }
  return Graph(side * side, e);
}

// Sparse connected graph: path plus a few random chords.
Graph chorded(int n) {
  std::mt19937_64 rng(9);
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({v - 1, v});
  std::vector<std::vector<char>> used(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : e) used[u][v] = used[v][u] = 1;
  for (int k = 0; k < n / 3; ++k) {
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v || used[u][v]) continue;
    used[u][v] = used[v][u] = 1;
    e.push_back({u, v});
  }
  return Graph(n, e);
}

void BM_distance_parallel(benchmark::State& st) {
  Graph g = grid(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(distance_matrix(g));
}
void BM_distance_serial(benchmark::State& st) {
  Graph g = grid(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::distance_matrix(g));
}

void BM_navi_parallel(benchmark::State& st) {
  Graph g = grid(static_cast<int>(st.range(0)));
  auto d = distance_matrix(g);
  for (auto _ : st) benchmark::DoNotOptimize(build_geodesic_navi(g, d));
}
void BM_navi_serial(benchmark::State& st) {
  Graph g = grid(static_cast<int>(st.range(0)));
  auto d = distance_matrix(g);
  for (auto _ : st) benchmark::DoNotOptimize(reference::build_geodesic_navi(g, d));
}

void BM_cycles_parallel(benchmark::State& st) {
  Graph g = chorded(static_cast<int>(st.range(0)));
  auto d = distance_matrix(g);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_geodesic_cycles(g, d));
}
void BM_cycles_serial(benchmark::State& st) {
  Graph g = chorded(static_cast<int>(st.range(0)));
  auto d = distance_matrix(g);
  for (auto _ : st) benchmark::DoNotOptimize(reference::enumerate_geodesic_cycles(g, d));
}

}  // namespace

BENCHMARK(BM_distance_parallel)->Arg(16)->Arg(32)->Arg(48)->UseRealTime();
BENCHMARK(BM_distance_serial)->Arg(16)->Arg(32)->Arg(48)->UseRealTime();
BENCHMARK(BM_navi_parallel)->Arg(8)->Arg(12)->UseRealTime();
BENCHMARK(BM_navi_serial)->Arg(8)->Arg(12)->UseRealTime();
BENCHMARK(BM_cycles_parallel)->Arg(60)->Arg(120)->UseRealTime();
BENCHMARK(BM_cycles_serial)->Arg(60)->Arg(120)->UseRealTime();

BENCHMARK_MAIN();
