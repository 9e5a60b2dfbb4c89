#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctwkit/graph.hpp"

namespace ctwkit::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
// r x c grid, vertex (i, j) = i*c + j.
Graph grid_graph(int rows, int cols);
Graph petersen_graph();
// Two branch vertices 0 and 1 joined by three internally disjoint paths
// with the given numbers of edges (each ≥ 1, at most one equal to 1).
Graph theta_graph(int a, int b, int c);
// Triangles {0,1,2} and {2,3,4}.
Graph bowtie_graph();

// Connected graphs: a random spanning tree plus extra edges at densities
// cycling through 5%, 15%, 30%, 55% of the non-tree pairs.
std::vector<NamedGraph> random_corpus(int count = 200, int max_n = 14, std::uint64_t seed = 0x5eed2026);

std::vector<NamedGraph> structured_corpus();

}  // namespace ctwkit::testing
