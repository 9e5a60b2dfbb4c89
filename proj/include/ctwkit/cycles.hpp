#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ctwkit/graph.hpp"

namespace ctwkit {

/// A simple cycle v_0 .. v_{k-1} (edge v_{k-1} v_0 implicit), k ≥ 3, kept
/// in canonical form: least vertex first, then towards its smaller neighbor
/// on the cycle.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()); }
  Vertex operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }

  /// Orders by length, then by vertex sequence.
  friend bool operator<(const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices_ < b.vertices_;
  }
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// True when the sequence is a cycle of g: ≥ 3 distinct vertices, consecutive
/// ones (and last/first) adjacent.
bool is_cycle_of(const Graph& g, const std::vector<Vertex>& vertices);

/// Element of the GF(2) edge space of a graph; addition is symmetric difference.
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(int edge_count) : bits_(static_cast<std::size_t>(edge_count)) {}

  static EdgeVector of_cycle(const Graph& g, const Cycle& c);
  /// Edges of a walk v_0 v_1 ... v_k; consecutive vertices must be adjacent.
  static EdgeVector of_path(const Graph& g, const Path& p);

  int dimension() const { return static_cast<int>(bits_.size()); }
  bool contains(int edge) const { return bits_.test(static_cast<std::size_t>(edge)); }
  void toggle(int edge) { bits_.flip(static_cast<std::size_t>(edge)); }
  bool empty() const { return bits_.none(); }
  int count() const { return static_cast<int>(bits_.count()); }
  std::vector<int> edges() const;
  /// Lowest edge index present, -1 when empty.
  int lowest() const {
    auto p = bits_.find_first();
    return p == boost::dynamic_bitset<std::uint64_t>::npos ? -1 : static_cast<int>(p);
  }

  /// True when every vertex has even degree in this edge set.
  bool in_cycle_space(const Graph& g) const;
  /// Vertices incident to at least one edge.
  VertexSet support(const Graph& g) const;

  EdgeVector& operator+=(const EdgeVector& o) { bits_ ^= o.bits_; return *this; }
  friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

/// True iff distance along c equals the graph distance for every pair on c.
/// Throws PreconditionError when c is not a cycle of g.
bool is_geodesic_cycle(const Graph& g, const DistanceMatrix& dist, const Cycle& c);
bool is_geodesic_cycle(const Graph& g, const Cycle& c);

/// Calls `visit` for every geodesic cycle whose least vertex is `root`.
/// Cycles longer than `max_length` are not explored.
void geodesic_cycles_from_root(const Graph& g, const DistanceMatrix& dist, Vertex root, int max_length,
                               const std::function<void(const Cycle&)>& visit);

/// Every geodesic cycle in canonical form, sorted by (length, sequence).
/// Roots are processed in parallel.
std::vector<Cycle> enumerate_geodesic_cycles(const Graph& g);
std::vector<Cycle> enumerate_geodesic_cycles(const Graph& g, const DistanceMatrix& dist);

/// Maximum geodesic cycle length; 1 when g is a forest.
int longest_geodesic_cycle(const Graph& g);
int longest_geodesic_cycle(const Graph& g, const DistanceMatrix& dist);

struct Closure {
  VertexSet vertices;
  EdgeVector edges;
  std::vector<int> contributing;  // indices into the cycle list
};

/// Union of the cycles meeting x.
Closure c_closure(const Graph& g, const std::vector<Cycle>& cycles, const VertexSet& x);

struct ClosureDistanceReport {
  bool preconditions_hold = false;
  std::string failed_precondition;  // set when preconditions_hold is false
  int max_distance = 0;             // largest distance between two members of x
  long long bound = 0;              // k * (|x| - 1)
};

/// Checks x ⊆ Cl(x), Cl(x) connected and every cycle of length ≤ k, then
/// reports the largest in-x distance against k·(|x| - 1). Throws
/// InternalError if the bound fails while the preconditions hold.
ClosureDistanceReport closure_distance_bound(const Graph& g, const DistanceMatrix& dist,
                                             const std::vector<Cycle>& cycles, int k, const VertexSet& x);

/// Geodesic cycles, taken in (length, sequence) order while they raise the
/// GF(2) rank, until the rank reaches m - n + #components.
std::vector<Cycle> geodesic_cycle_basis(const Graph& g);
std::vector<Cycle> geodesic_cycle_basis(const Graph& g, const DistanceMatrix& dist);

int cycle_space_dimension(const Graph& g);

/// 0/1 coefficients over `generators` whose sum is z. With dependent
/// generators one solution is returned. Throws PreconditionError when z has
/// a vertex of odd degree or is outside the span.
std::vector<int> decompose(const Graph& g, const EdgeVector& z, const std::vector<Cycle>& generators);

/// Given a separation (near_side, far_side) with separator X, a cycle made of
/// an x-y path `far_path` whose interior avoids the near side and an x-y path
/// `near_path` inside the near side, and cycles generating it, returns an x-y
/// path whose edges lie on cycles meeting X.
///
/// The far path is summed with the generators lying strictly on the far side;
/// the result has odd degree exactly at x and y, so it holds an x-y path.
/// Throws PreconditionError for an invalid separation or paths, or when the
/// cycle is outside the generated space.
Path find_closure_path(const Graph& g, const VertexSet& separator, const VertexSet& far_side,
                       const VertexSet& near_side, const Path& far_path, const Path& near_path,
                       const std::vector<Cycle>& cycles);

}  // namespace ctwkit
