#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctwkit/graph.hpp"
#include "ctwkit/tree_decomposition.hpp"

// Slow, independent reimplementations used only to check the library.
// They share nothing with it beyond the Graph / TreeDecomposition containers.
namespace ctwkit::oracle {

using Mask = std::uint32_t;
inline constexpr int kInf = 1 << 29;

std::vector<std::vector<int>> floyd_warshall(const Graph& g);

// Every simple cycle, as a rotation/reflection-normalized vertex list.
std::vector<std::vector<Vertex>> simple_cycles(const Graph& g, int max_length = 1 << 20);
bool geodesic(const std::vector<std::vector<int>>& dist, const std::vector<Vertex>& cycle);
std::vector<std::vector<Vertex>> geodesic_cycles(const Graph& g);

// Every shortest x-y path.
std::vector<std::vector<Vertex>> geodesic_paths(const Graph& g, Vertex x, Vertex y);
// Characteristic-vector comparison over vertex order with 0 < 1.
bool char_vector_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b);

Mask mask_of(const VertexSet& s);
bool connected_mask(const Graph& g, Mask s);
int min_cover(const Graph& g, const std::vector<Mask>& sets);
int min_connected_cover(const Graph& g, const std::vector<Mask>& sets);

// Subset DP over elimination orderings.
int treewidth(const Graph& g);

// Axioms with (T3) checked on all node triples.
bool valid_decomposition(const Graph& g, const TreeDecomposition& d);
bool connected_bags(const Graph& g, const TreeDecomposition& d);

// Empty string when all three properties hold, else a description.
std::string non_containment_violation(const TreeDecomposition& d);
std::string split_violation(const Graph& g, const TreeDecomposition& d);
std::string adhesion_violation(const Graph& g, const TreeDecomposition& d);

// A decomposition built from a random elimination order.
TreeDecomposition random_decomposition(const Graph& g, std::uint64_t seed);

}  // namespace ctwkit::oracle
