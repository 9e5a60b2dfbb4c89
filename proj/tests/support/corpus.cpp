#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace ctwkit::testing {

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph grid_graph(int rows, int cols) {
  std::vector<Edge> e;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) e.emplace_back(i * cols + j, i * cols + j + 1);
      if (i + 1 < rows) e.emplace_back(i * cols + j, (i + 1) * cols + j);
    }
  return Graph(rows * cols, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph theta_graph(int a, int b, int c) {
  std::vector<Edge> e;
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 1);
  }
  return Graph(next, e);
}

Graph bowtie_graph() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

std::vector<NamedGraph> random_corpus(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double densities[] = {0.05, 0.15, 0.30, 0.55};
  std::vector<NamedGraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(4, max_n)(rng);
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::set<Edge> edges;
    for (int v = 1; v < n; ++v) {
      int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
      int a = label[static_cast<std::size_t>(u)], b = label[static_cast<std::size_t>(v)];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
    const double p = densities[i % 4];
    std::bernoulli_distribution extra(p);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!edges.contains({a, b}) && extra(rng)) edges.emplace(a, b);
    std::vector<Edge> list(edges.begin(), edges.end());
    out.push_back({"random-" + std::to_string(i) + "-n" + std::to_string(n), Graph(n, list)});
  }
  return out;
}

std::vector<NamedGraph> structured_corpus() {
  std::vector<NamedGraph> out;
  for (int n = 3; n <= 9; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  for (int n = 2; n <= 6; ++n) out.push_back({"P" + std::to_string(n), path_graph(n)});
  for (int n = 3; n <= 6; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  out.push_back({"star3", star_graph(3)});
  out.push_back({"grid2x3", grid_graph(2, 3)});
  out.push_back({"grid3x3", grid_graph(3, 3)});
  out.push_back({"grid3x4", grid_graph(3, 4)});
  out.push_back({"petersen", petersen_graph()});
  out.push_back({"theta223", theta_graph(2, 2, 3)});
  out.push_back({"theta234", theta_graph(2, 3, 4)});
  out.push_back({"theta333", theta_graph(3, 3, 3)});
  out.push_back({"bowtie", bowtie_graph()});
  return out;
}

}  // namespace ctwkit::testing
