#pragma once

#include <string>
#include <vector>

#include "ctwkit/cycles.hpp"
#include "ctwkit/graph.hpp"
#include "ctwkit/tree_decomposition.hpp"

namespace ctwkit {

/// Pairwise touching, connected vertex sets.
struct Bramble {
  std::vector<VertexSet> sets;
};

struct BrambleReport {
  bool ok = true;
  // Offending set(s); b stays -1 for a single-set violation.
  int a = -1, b = -1;
  std::string first_violation;
};

/// Two sets touch when they intersect or an edge joins them.
bool touching(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Checks each set is non-empty and connected, then each pair touches.
BrambleReport validate_bramble(const Graph& g, const Bramble& b);

struct Cover {
  int size = 0;
  VertexSet vertices;
};

/// Smallest set meeting every member (hitting-set branch and bound).
Cover minimum_cover(const Graph& g, const Bramble& b);
int order(const Graph& g, const Bramble& b);

/// Smallest connected set meeting every member. Requires g connected.
Cover minimum_connected_cover(const Graph& g, const Bramble& b);
int connected_order(const Graph& g, const Bramble& b);

/// The arcs of floor(n/2) consecutive vertices of an n-cycle, one per start.
Bramble cycle_bramble(const Graph& g, const Cycle& c);

/// A node whose bag meets every set of b. Throws PreconditionError for an
/// invalid decomposition or bramble.
NodeId part_cover_witness(const Graph& g, const TreeDecomposition& d, const Bramble& b);

/// k + C(k+1, 2) * ((2k - 1) * k - 1).
long long duality_bound_g(int k);

/// Brambles that are cheap to write down: arcs of every geodesic cycle,
/// singletons of every maximal clique, and the radius-r balls around all
/// vertices when the diameter is at most 2r + 1.
std::vector<Bramble> probe_brambles(const Graph& g);

}  // namespace ctwkit
