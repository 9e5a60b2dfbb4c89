#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "ctwkit/vertex_set.hpp"

namespace ctwkit {

using Edge = std::pair<Vertex, Vertex>;
using Path = std::vector<Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and symmetric. Edges are numbered 0..m-1 in
/// lexicographic order of (min endpoint, max endpoint); the numbering is the
/// coordinate system of EdgeVector.
class Graph {
 public:
  Graph() = default;
  /// Throws PreconditionError on loops, parallel edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edge index of uv, or -1 when uv is not an edge.
  int edge_index(Vertex u, Vertex v) const;
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet empty_set() const { return VertexSet(vertex_count()); }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<int>> adj_edge_;  // parallel to adj_
  std::vector<Edge> edges_;
};

/// Induced subgraph with the map from its vertices back to the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // sorted ascending, so the vertex order is inherited

  /// Parent vertex -> subgraph vertex, -1 when absent.
  std::vector<Vertex> from_parent(int parent_n) const;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Dense all-pairs hop distances.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

  int size() const { return n_; }
  int at(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  int& at(Vertex u, Vertex v) { return d_[index(u, v)]; }
  std::span<const int> row(Vertex u) const {
    return {d_.data() + index(u, 0), static_cast<std::size_t>(n_)};
  }
  std::span<int> row(Vertex u) { return {d_.data() + index(u, 0), static_cast<std::size_t>(n_)}; }

  /// Largest finite distance.
  int diameter() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<int> d_;
};

/// BFS distances from one source inside the subgraph induced by `allowed`.
/// Vertices outside `allowed` (and the source, if excluded) stay unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source, const VertexSet& allowed);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// One BFS per source, sources distributed over OpenMP threads.
DistanceMatrix distance_matrix(const Graph& g);

/// Connected components of G - forbidden, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& forbidden);
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);
/// True iff s is non-empty and G[s] is connected.
bool is_connected_set(const Graph& g, const VertexSet& s);

/// Vertices outside s with a neighbor in s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// Shortest u-v path inside G[allowed], empty when none exists.
Path shortest_path(const Graph& g, Vertex u, Vertex v, const VertexSet& allowed);

struct BlockForest {
  std::vector<VertexSet> blocks;  // ordered by least vertex, ties by second least
  VertexSet cut_vertices;
};

/// Biconnected decomposition; bridges and isolated vertices are blocks of their own.
BlockForest blocks(const Graph& g);

}  // namespace ctwkit
